"""Brauer characters of symmetric powers and the decomposition solve.

A p-regular element of SL2 has two eigenvalues in the big field that
multiply to 1.  The i-th symmetric power of the natural two-dimensional
module therefore has eigenvalues alpha^(i-2m), and its Brauer character
is the sum of their multiplicative lifts into the cyclotomic field.
Restricting class functions to p-regular classes and solving against
the q x q matrix of these characters realizes the decomposition map
with exact integer output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum, field_for_tower, invert_matrix, teichmueller_lift
from .classfun import ClassFn
from .errors import (
    IndexOutOfRange,
    NonIntegralSolution,
    SingularBrauerMatrix,
    SingularMatrix,
)
from .fields import FieldTower
from .group import GroupTable, class_positions, conjugacy_classes


def p_regular_classes(table: GroupTable):
    """The p-regular classes, in class order; columns of the Brauer matrix."""
    return [c for c in conjugacy_classes(table) if c.p_regular]


class BrauerFn:
    """One exact value per p-regular class, aligned with p_regular_classes."""

    __slots__ = ("table", "field", "values")

    def __init__(self, table: GroupTable, values):
        self.table = table
        self.field = field_for_tower(table.tower)
        vals = tuple(self.field.coerce(v) for v in values)
        assert len(vals) == table.tower.q, "one value per p-regular class"
        self.values = vals

    def __getitem__(self, k: int) -> CycNum:
        return self.values[k]

    def __len__(self):
        return len(self.values)

    def __add__(self, other: "BrauerFn") -> "BrauerFn":
        assert self.table is other.table
        return BrauerFn(self.table,
                        [x + y for x, y in zip(self.values, other.values)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, BrauerFn) and self.table is other.table
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.table), self.values))

    def __repr__(self) -> str:
        return f"BrauerFn({[v.approx_str() for v in self.values]})"


def conj_brauer(f: BrauerFn) -> BrauerFn:
    return BrauerFn(f.table, [v.conj() for v in f.values])


@dataclass(frozen=True)
class G0Vector:
    """Integer coordinates against the symmetric-power basis."""

    coeffs: tuple

    def __add__(self, other: "G0Vector") -> "G0Vector":
        assert len(self.coeffs) == len(other.coeffs)
        return G0Vector(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "G0Vector":
        return G0Vector(tuple(-x for x in self.coeffs))

    def __rmul__(self, n: int) -> "G0Vector":
        return G0Vector(tuple(n * x for x in self.coeffs))


def _eigenvalue(tower: FieldTower, rep) -> int:
    """A root in the big field of the characteristic polynomial of rep.

    Roots come in inverse pairs, and every downstream use is symmetric
    under swapping the pair, so the smaller encoding is returned.
    """
    a, b, c, d = rep
    tr = tower.add(a, d)
    roots = [lam for lam in range(1, tower.q2)
             if tower.add(tower.sub(tower.mul(lam, lam), tower.mul(tr, lam)), 1) == 0]
    assert roots, "a p-regular element must have eigenvalues in the big field"
    return roots[0]


def brauer_character_sym(table: GroupTable, i: int) -> BrauerFn:
    """Brauer character of the i-th symmetric power, 0 <= i <= q-1."""
    tower = table.tower
    q = tower.q
    if not 0 <= i <= q - 1:
        raise IndexOutOfRange(i, q)
    field = field_for_tower(tower)
    values = []
    for cls in p_regular_classes(table):
        k = tower.discrete_log(_eigenvalue(tower, cls.rep))
        acc = field.zero
        for m in range(i + 1):
            acc = acc + field.root_of_unity(tower.n_units, (i - 2 * m) * k)
        values.append(acc)
    return BrauerFn(table, values)


# --- independent slow path ----------------------------------------------------

def _sym_matrix(tower: FieldTower, g, i: int):
    """Matrix of g acting on the (i+1)-dimensional space of degree-i
    monomials in the two basis vectors."""
    a, b, c, d = g
    cols = []
    for t in range(i + 1):
        # expand (a e1 + c e2)^(i-t) * (b e1 + d e2)^t, tracking e2-degree
        poly = [1] + [0] * i
        for _ in range(i - t):
            poly = [tower.add(tower.mul(a, poly[s]),
                              tower.mul(c, poly[s - 1]) if s else 0)
                    for s in range(i + 1)]
        for _ in range(t):
            poly = [tower.add(tower.mul(b, poly[s]),
                              tower.mul(d, poly[s - 1]) if s else 0)
                    for s in range(i + 1)]
        cols.append(poly)
    return [[cols[t][s] for t in range(i + 1)] for s in range(i + 1)]


def _kernel_dimension(tower: FieldTower, mat) -> int:
    n = len(mat)
    m = [row[:] for row in mat]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = tower.inv(m[rank][col])
        m[rank] = [tower.mul(inv, x) for x in m[rank]]
        for r in range(n):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [tower.sub(x, tower.mul(f, y)) for x, y in zip(m[r], m[rank])]
        rank += 1
    return n - rank


def brauer_character_sym_via_matrices(table: GroupTable, i: int) -> BrauerFn:
    """Slow cross-check route: build the symmetric-power matrix, read off
    eigenvalue multiplicities as kernel dimensions, lift and sum."""
    tower = table.tower
    q = tower.q
    if not 0 <= i <= q - 1:
        raise IndexOutOfRange(i, q)
    field = field_for_tower(tower)
    values = []
    for cls in p_regular_classes(table):
        m = _sym_matrix(tower, cls.rep, i)
        n = i + 1
        acc = field.zero
        total = 0
        for mu in range(1, tower.q2):
            shifted = [[tower.sub(m[r][c], mu if r == c else 0)
                        for c in range(n)] for r in range(n)]
            mult = _kernel_dimension(tower, shifted)
            if mult:
                total += mult
                acc = acc + mult * teichmueller_lift(field, tower, mu)
        assert total == n, "symmetric power of a p-regular element must be semisimple"
        values.append(acc)
    return BrauerFn(table, values)


# --- the decomposition solve ---------------------------------------------------

def brauer_matrix(table: GroupTable):
    """Rows phi_0..phi_(q-1) over p-regular classes, with determinant and
    inverse, computed once per table."""
    cached = getattr(table, "_brauer_matrix", None)
    if cached is not None:
        return cached
    q = table.tower.q
    rows = [list(brauer_character_sym(table, i).values) for i in range(q)]
    try:
        inverse, det = invert_matrix(rows)
    except SingularMatrix as exc:
        raise SingularBrauerMatrix(str(exc)) from exc
    cached = (rows, inverse, det)
    table._brauer_matrix = cached
    return cached


def expand_in_brauer_basis(fn: BrauerFn) -> G0Vector:
    """Exact integer coordinates of a Brauer function in the phi basis."""
    _, inverse, _ = brauer_matrix(fn.table)
    n = len(fn)
    coeffs = []
    for j in range(n):
        acc = fn.field.zero
        for c in range(n):
            acc = acc + fn[c] * inverse[c][j]
        coeffs.append(acc)
    out = []
    for val in coeffs:
        as_int = val.as_integer()
        if as_int is None:
            raise NonIntegralSolution([v.approx_str() for v in coeffs])
        out.append(as_int)
    return G0Vector(tuple(out))


def decomposition_map(chi: ClassFn) -> G0Vector:
    """Exact coordinates of a character's p-regular restriction.

    Solves sum_i a_i * phi_i = chi on p-regular classes and insists on
    integer coefficients.
    """
    table = chi.table
    restriction = [chi[k] for k, c in enumerate(conjugacy_classes(table))
                   if c.p_regular]
    return expand_in_brauer_basis(BrauerFn(table, restriction))


def regular_character(table: GroupTable) -> ClassFn:
    """|G| at the identity class and zero elsewhere."""
    identity_class = class_positions(table)[table.identity_index]
    values = [table.order if k == identity_class else 0
              for k in range(len(conjugacy_classes(table)))]
    return ClassFn(table, values)

"""Geometry of the plane curve X*Y^q - X^q*Y = delta * Z^(q+1).

The right-hand scalar delta is normalized by delta^q = -delta, which
picks the twist of the curve whose point count over the quadratic
extension attains the Weil upper bound; for even q this gives delta = 1
and the familiar equation X*Y^q - X^q*Y = Z^(q+1).  The choice does not
touch the group action (the matrices act only on X and Y) and over the
algebraic closure all twists are the same curve, so everything
representation-theoretic is independent of it.

Everything here is finite and exact: smoothness falls out of the shape
of the formal partial derivatives, point counts come from scanning the
affine chart, and the genus is computed twice (degree formula and the
quadratic point count) with the two routes required to agree.  The
space of global one-forms is modeled by homogeneous forms of degree
q - 2 in the three coordinates, which has the right dimension and
carries the group action through the matrix on the span of X and Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .brauer import BrauerFn, _eigenvalue, p_regular_classes
from .cyclotomic import field_for_tower
from .errors import GenusMismatch
from .fields import FieldTower, build_field_tower
from .group import GroupTable

# Trivariate polynomials are dicts {(a, b, c): coefficient encoding} for
# the monomial X^a Y^b Z^c, with zero coefficients never stored.


def _poly_clean(poly):
    return {e: c for e, c in poly.items() if c != 0}


def _poly_mul(tower: FieldTower, f, g):
    out = {}
    for (a1, b1, c1), u in f.items():
        for (a2, b2, c2), v in g.items():
            e = (a1 + a2, b1 + b2, c1 + c2)
            out[e] = tower.add(out.get(e, 0), tower.mul(u, v))
    return _poly_clean(out)


def _poly_pow(tower: FieldTower, f, e: int):
    out = {(0, 0, 0): 1}
    for _ in range(e):
        out = _poly_mul(tower, out, f)
    return out


def _partial(tower: FieldTower, poly, axis: int):
    """Formal derivative along one coordinate, in characteristic p."""
    out = {}
    for exps, coeff in poly.items():
        k = exps[axis] % tower.p
        if exps[axis] == 0 or k == 0:
            continue
        dropped = list(exps)
        dropped[axis] -= 1
        e = tuple(dropped)
        out[e] = tower.add(out.get(e, 0), tower.mul(coeff, k))
    return _poly_clean(out)


def twist_scalar(tower: FieldTower) -> int:
    """The smallest nonzero delta with delta^q = -delta; 1 when q is even."""
    for delta in range(1, tower.q2):
        if tower.frobenius(delta) == tower.neg(delta):
            return delta
    raise AssertionError("no antisymmetric scalar in the big field")


@dataclass(frozen=True, eq=False)
class CurveSpec:
    """Defining data of the curve over the fixed field tower."""

    tower: FieldTower
    q: int
    degree: int
    twist: int
    form: dict


def curve_spec(tower: FieldTower) -> CurveSpec:
    q = tower.q
    delta = twist_scalar(tower)
    form = {
        (1, q, 0): 1,
        (q, 1, 0): tower.minus_one(),
        (0, 0, q + 1): tower.neg(delta),
    }
    return CurveSpec(tower=tower, q=q, degree=q + 1, twist=delta, form=form)


def substitute_linear(tower: FieldTower, poly, m):
    """Plug X -> aX + bY and Y -> cX + dY into poly; Z is untouched."""
    a, b, c, d = m
    img_x = _poly_clean({(1, 0, 0): a, (0, 1, 0): b})
    img_y = _poly_clean({(1, 0, 0): c, (0, 1, 0): d})
    out = {}
    for (ea, eb, ec), coeff in poly.items():
        term = {(0, 0, ec): coeff}
        term = _poly_mul(tower, term, _poly_pow(tower, img_x, ea))
        term = _poly_mul(tower, term, _poly_pow(tower, img_y, eb))
        for e, v in term.items():
            out[e] = tower.add(out.get(e, 0), v)
    return _poly_clean(out)


def form_invariant_under(spec: CurveSpec, m) -> bool:
    return substitute_linear(spec.tower, spec.form, m) == spec.form


def elementary_generators(tower: FieldTower):
    """Upper and lower unipotent matrices, a generating set of the group."""
    gens = []
    for b in tower.fq_elements:
        if b == 0:
            continue
        gens.append((1, b, 0, 1))
        gens.append((1, 0, b, 1))
    return gens


def smoothness_check(q: int, tower: FieldTower | None = None) -> bool:
    """Whether the partial derivatives share no projective zero.

    Each partial of the defining form reduces to a single pure power of
    one coordinate, so a common zero must kill that coordinate; when all
    three coordinates are forced to vanish the only common zero is the
    (non-projective) origin.
    """
    tower = tower or build_field_tower(q)
    form = curve_spec(tower).form
    forced = set()
    for axis in range(3):
        pd = _partial(tower, form, axis)
        if len(pd) != 1:
            return False
        (exps,) = pd.keys()
        live = [i for i in range(3) if exps[i] > 0]
        if len(live) != 1:
            return False
        forced.add(live[0])
    return forced == {0, 1, 2}


def count_points(q: int, n: int, tower: FieldTower | None = None) -> int:
    """Number of projective points over the degree-n extension, n in {1, 2}.

    The affine chart x*y^q - x^q*y = delta is scanned directly; the locus
    at Z = 0 contributes the q + 1 points of the rational projective line
    regardless of n.  Over the base field the affine chart is empty, since
    the left side vanishes identically there.
    """
    assert n in (1, 2)
    tower = tower or build_field_tower(q)
    delta = twist_scalar(tower)
    elems = range(tower.q2) if n == 2 else tower.fq_elements
    count = 0
    for x in elems:
        xq = tower.frobenius(x)
        for y in elems:
            if tower.sub(tower.mul(x, tower.frobenius(y)), tower.mul(xq, y)) == delta:
                count += 1
    return count + q + 1


def genus(q: int, tower: FieldTower | None = None) -> int:
    """Genus by the plane-curve degree formula, cross-checked by counting.

    Raises GenusMismatch when the quadratic point count fails to solve to
    the same integer, which would mean an internal inconsistency.
    """
    tower = tower or build_field_tower(q)
    by_degree = q * (q - 1) // 2
    excess = count_points(q, 2, tower) - q * q - 1
    by_count = Fraction(excess, 2 * q)
    if by_count != by_degree:
        raise GenusMismatch(by_degree, by_count)
    return by_degree


@dataclass(frozen=True)
class CanonicalModel:
    """Monomial basis of the homogeneous forms of degree q - 2."""

    degree: int
    monomials: tuple

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def canonical_model(q: int) -> CanonicalModel:
    d = q - 2
    monomials = tuple(
        (a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)
    )
    return CanonicalModel(degree=d, monomials=monomials)


def canonical_brauer(table: GroupTable, tower: FieldTower | None = None) -> BrauerFn:
    """Brauer character of the group acting on degree-(q-2) forms.

    Functions pull back, so the matrix acting on the span of X and Y is
    the inverse transpose of the group element; Z is fixed.  On each
    p-regular class the monomial X^a Y^b Z^c is an eigenvector with
    eigenvalue alpha^(a-b) for an eigenvalue alpha of that matrix, and
    the character value is the sum of the multiplicative lifts.
    """
    tower = tower or table.tower
    assert tower is table.tower
    field = field_for_tower(tower)
    model = canonical_model(tower.q)
    values = []
    for cls in p_regular_classes(table):
        a, b, c, d = cls.rep
        inv_transpose = (d, tower.neg(c), tower.neg(b), a)
        k = tower.discrete_log(_eigenvalue(tower, inv_transpose))
        acc = field.zero
        for ea, eb, _ec in model.monomials:
            acc = acc + field.root_of_unity(tower.n_units, (ea - eb) * k)
        values.append(acc)
    return BrauerFn(table, values)

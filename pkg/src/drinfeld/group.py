"""SL(2) over a finite field: enumeration, conjugacy, subgroups, torus.

Group elements are 4-tuples (a, b, c, d) of field encodings with
a*d - b*c = 1, read row by row.  All arithmetic goes through the
FieldTower so the same code serves every supported q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputNotInMu
from .fields import FieldTower

_CLOSURE_EXHAUSTIVE_LIMIT = 360
_CLOSURE_SAMPLES = 4000


def mat_mul(tower: FieldTower, m, n):
    """Product of two 2x2 matrices with entries in the tower."""
    a, b, c, d = m
    e, f, g, h = n
    return (
        tower.add(tower.mul(a, e), tower.mul(b, g)),
        tower.add(tower.mul(a, f), tower.mul(b, h)),
        tower.add(tower.mul(c, e), tower.mul(d, g)),
        tower.add(tower.mul(c, f), tower.mul(d, h)),
    )


def mat_det(tower: FieldTower, m):
    a, b, c, d = m
    return tower.sub(tower.mul(a, d), tower.mul(b, c))


def mat_trace(tower: FieldTower, m):
    return tower.add(m[0], m[3])


def mat_inv_sl2(tower: FieldTower, m):
    """Inverse of a determinant-one matrix: swap diagonal, negate the rest."""
    a, b, c, d = m
    return (d, tower.neg(b), tower.neg(c), a)


def identity_matrix(tower: FieldTower):
    return (1, 0, 0, 1)


class GroupTable:
    """The finite group SL2(F_q), fully enumerated.

    Elements are listed lexicographically by the positions of their
    entries in the sorted F_q element list, so the ordering is
    reproducible across runs.  Identity and inverses are checked
    exhaustively at construction; closure is checked exhaustively for
    small groups and on a fixed pseudorandom sample of pairs above
    that, with every runtime product lookup acting as a further guard.
    """

    def __init__(self, tower: FieldTower):
        self.tower = tower
        q = tower.q
        fq = tower.fq_elements
        elements = []
        for a in fq:
            for b in fq:
                for c in fq:
                    for d in fq:
                        if tower.sub(tower.mul(a, d), tower.mul(b, c)) == 1:
                            elements.append((a, b, c, d))
        self.elements = elements
        self.order = len(elements)
        assert self.order == q ** 3 - q, "wrong element count for SL2"
        self.index = {m: i for i, m in enumerate(elements)}
        self.identity_index = self.index[(1, 0, 0, 1)]

        for i, m in enumerate(elements):
            assert mat_inv_sl2(tower, m) in self.index, "inverse escaped the table"

        if self.order <= _CLOSURE_EXHAUSTIVE_LIMIT:
            pairs = ((i, j) for i in range(self.order) for j in range(self.order))
        else:
            rng = random.Random(0)
            pairs = (
                (rng.randrange(self.order), rng.randrange(self.order))
                for _ in range(_CLOSURE_SAMPLES)
            )
        for i, j in pairs:
            assert mat_mul(tower, elements[i], elements[j]) in self.index

        self._classes = None
        self._class_pos = None

    def mul(self, i: int, j: int) -> int:
        return self.index[mat_mul(self.tower, self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self.index[mat_inv_sl2(self.tower, self.elements[i])]

    def conj(self, g: int, x: int) -> int:
        """Index of g x g^-1."""
        t = self.tower
        m = mat_mul(t, self.elements[g], self.elements[x])
        return self.index[mat_mul(t, m, mat_inv_sl2(t, self.elements[g]))]

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity_index:
            cur = self.mul(cur, i)
            k += 1
        return k

    def __repr__(self) -> str:
        return f"GroupTable(q={self.tower.q}, order={self.order})"


@dataclass(frozen=True)
class ClassData:
    """One conjugacy class: representative, size, order data."""

    rep_index: int
    rep: tuple
    size: int
    element_order: int
    p_regular: bool
    members: frozenset


def conjugacy_classes(table: GroupTable) -> list[ClassData]:
    """Orbit partition of the group under conjugation.

    Classes come out ordered by their smallest member index, and the
    representative is that smallest member.  Results are cached on the
    table.
    """
    if table._classes is not None:
        return table._classes
    p = table.tower.p
    assigned = [False] * table.order
    classes = []
    for start in range(table.order):
        if assigned[start]:
            continue
        orbit = {table.conj(g, start) for g in range(table.order)}
        for i in orbit:
            assigned[i] = True
        order = table.element_order(start)
        classes.append(ClassData(
            rep_index=start,
            rep=table.elements[start],
            size=len(orbit),
            element_order=order,
            p_regular=order % p != 0,
            members=frozenset(orbit),
        ))
    assert sum(c.size for c in classes) == table.order, "classes do not partition"
    assert all(table.order % c.size == 0 for c in classes)
    table._classes = classes
    return classes


def class_positions(table: GroupTable) -> list[int]:
    """Element index -> position of its class in conjugacy_classes order."""
    if table._class_pos is not None:
        return table._class_pos
    pos = [-1] * table.order
    for k, cls in enumerate(conjugacy_classes(table)):
        for i in cls.members:
            pos[i] = k
    assert all(x >= 0 for x in pos)
    table._class_pos = pos
    return pos


@dataclass(frozen=True)
class SubgroupData:
    """Member indices of a subgroup plus left-coset representatives."""

    members: tuple
    member_set: frozenset
    coset_reps: tuple


def _make_subgroup(table: GroupTable, members: list[int]) -> SubgroupData:
    members = sorted(members)
    member_set = frozenset(members)
    assert table.order % len(members) == 0
    reps = []
    seen = [False] * table.order
    for i in range(table.order):
        if not seen[i]:
            reps.append(i)
            for h in members:
                seen[table.mul(i, h)] = True
    assert len(reps) == table.order // len(members), "coset cover is off"
    return SubgroupData(tuple(members), member_set, tuple(reps))


def subgroup_U(table: GroupTable) -> SubgroupData:
    """Upper unitriangular subgroup, order q (a Sylow p-subgroup)."""
    members = [i for i, (a, b, c, d) in enumerate(table.elements)
               if a == 1 and c == 0 and d == 1]
    assert len(members) == table.tower.q
    return _make_subgroup(table, members)


def subgroup_B(table: GroupTable) -> SubgroupData:
    """Upper triangular (Borel) subgroup, order q(q-1)."""
    members = [i for i, (a, b, c, d) in enumerate(table.elements) if c == 0]
    q = table.tower.q
    assert len(members) == q * (q - 1)
    return _make_subgroup(table, members)


def subgroup_S(table: GroupTable) -> SubgroupData:
    """Diagonal subgroup, order q-1."""
    members = [i for i, (a, b, c, d) in enumerate(table.elements)
               if b == 0 and c == 0]
    assert len(members) == table.tower.q - 1
    return _make_subgroup(table, members)


def fq2_coordinates(tower: FieldTower, v: int) -> tuple[int, int]:
    """Write v in the big field as v0 + v1*beta with v0, v1 in F_q.

    beta is the canonical root generating the big field; v1 comes from
    the Frobenius difference (v - v^q) / (beta - beta^q), which is well
    defined because beta is not fixed by Frobenius.
    """
    beta = tower.g2
    diff = tower.sub(beta, tower.frobenius(beta))
    v1 = tower.mul(tower.sub(v, tower.frobenius(v)), tower.inv(diff))
    v0 = tower.sub(v, tower.mul(v1, beta))
    assert v0 in tower.fq_set and v1 in tower.fq_set
    return v0, v1


@dataclass(frozen=True)
class TorusData:
    """Non-split torus: subgroup data plus the norm-one labeling.

    to_group maps each norm-one element t of the big field to the index
    of the matrix of multiplication-by-t in the basis {1, beta};
    from_group inverts that.
    """

    subgroup: SubgroupData
    to_group: dict
    from_group: dict


def torus_matrix(tower: FieldTower, t: int):
    """Matrix of multiplication-by-t on the big field as an F_q plane."""
    t0, t1 = fq2_coordinates(tower, t)
    s0, s1 = fq2_coordinates(tower, tower.mul(t, tower.g2))
    return (t0, s0, t1, s1)


def nonsplit_torus(table: GroupTable) -> TorusData:
    tower = table.tower
    to_group = {}
    for t in tower.mu_subgroup():
        m = torus_matrix(tower, t)
        assert mat_det(tower, m) == 1, "norm-one element gave a non-SL2 matrix"
        to_group[t] = table.index[m]
    assert len(set(to_group.values())) == tower.q + 1, "labeling is not injective"
    from_group = {i: t for t, i in to_group.items()}
    subgroup = _make_subgroup(table, list(to_group.values()))
    return TorusData(subgroup, to_group, from_group)


def scalar_action_matrix(tower: FieldTower, t: int):
    """Scalar matrix for a norm-one element acting on the affine plane.

    The plane here carries coordinates in the big field, so the result
    is diag(t, t) over F_{q^2}.  Composing with a group element stays
    inside 2x2 matrices over the big field, which is exactly what the
    fixed-point counts consume.
    """
    if t == 0 or tower.pow(t, tower.q + 1) != 1:
        raise InputNotInMu(t)
    return (t, 0, 0, t)

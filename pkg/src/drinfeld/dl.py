"""Virtual characters of SL2(F_q) from fixed points on the affine curve.

The affine surface-in-a-plane here is the locus x*y^q - x^q*y = 1.  The
group acts linearly, the norm-one subgroup of the quadratic extension
acts by scalars, and averaging fixed-point counts against a character
of that subgroup produces the family of virtual characters indexed by
j = 1..q.  Elements of order divisible by p need a closed-form rule
instead of naive counting, because their fixed points carry wild
multiplicities.
"""

from __future__ import annotations

from fractions import Fraction

from .classfun import ClassFn, fixed_lines
from .cyclotomic import CycNum, field_for_tower
from .errors import (
    InputNotInMu,
    PSingularInput,
    SingularMatrix,
    TrivialThetaRequested,
)
from .fields import FieldTower
from .group import (
    GroupTable,
    class_positions,
    conjugacy_classes,
    mat_det,
    mat_mul,
    mat_trace,
    scalar_action_matrix,
)


class TorusChar:
    """Character of the norm-one subgroup, determined by an index j.

    The subgroup is cyclic of order q+1 with canonical generator gamma,
    and the character sends gamma^k to zeta_(q+1)^(jk).
    """

    __slots__ = ("tower", "field", "j")

    def __init__(self, tower: FieldTower, j: int):
        self.tower = tower
        self.field = field_for_tower(tower)
        self.j = j % (tower.q + 1)

    def __call__(self, t: int) -> CycNum:
        tower = self.tower
        if t == 0 or tower.pow(t, tower.q + 1) != 1:
            raise InputNotInMu(t)
        k, rem = divmod(tower.discrete_log(t), tower.q - 1)
        assert rem == 0, "norm-one element is not a power of gamma"
        return self.field.root_of_unity(tower.q + 1, self.j * k)

    def __mul__(self, other: "TorusChar") -> "TorusChar":
        return TorusChar(self.tower, self.j + other.j)


def lefschetz_D(tower: FieldTower, m) -> int:
    """Fixed-point number of an invertible 2x2 matrix on the affine locus.

    The identity gets its Euler-characteristic value 1 - q^2.  Any other
    matrix has fixed points only along an eigenvalue-one line; the line
    contributes q+1 points when the form x*y^q - x^q*y is nonzero on it
    and none otherwise.
    """
    if mat_det(tower, m) == 0:
        raise SingularMatrix("fixed points of a singular matrix")
    if m == (1, 0, 0, 1):
        return 1 - tower.q * tower.q
    a, b, c, d = m
    a1, d1 = tower.sub(a, 1), tower.sub(d, 1)
    # rank of m - identity decides whether eigenvalue 1 occurs
    if tower.sub(tower.mul(a1, d1), tower.mul(b, c)) != 0:
        return 0
    if a1 != 0 or b != 0:
        v = (tower.neg(b), a1)
    else:
        v = (d1, tower.neg(c))
    x, y = v
    if x != 0:
        x, y = 1, tower.mul(y, tower.inv(x))
    else:
        x, y = 0, 1
    assert tower.add(tower.mul(a1, x), tower.mul(b, y)) == 0
    assert tower.add(tower.mul(c, x), tower.mul(d1, y)) == 0
    q = tower.q
    pairing = tower.sub(tower.mul(x, tower.pow(y, q)), tower.mul(tower.pow(x, q), y))
    return q + 1 if pairing != 0 else 0


class DLCharacter(ClassFn):
    """A member of the virtual-character family, remembering its index."""

    __slots__ = ("j",)

    def __init__(self, table: GroupTable, values, j: int):
        super().__init__(table, values, virtual=True)
        self.j = j


def _averaged_value(table: GroupTable, theta: TorusChar, rep) -> CycNum:
    tower = table.tower
    field = theta.field
    acc = field.zero
    for t in tower.mu_subgroup():
        count = lefschetz_D(tower, mat_mul(tower, scalar_action_matrix(tower, t), rep))
        if count:
            acc = acc + theta(tower.inv(t)) * count
    return acc * Fraction(1, tower.q + 1)


def _central_part(tower: FieldTower, rep):
    """Split a p-singular element as center times unipotent; return the
    norm-one label of the central part."""
    tr = mat_trace(tower, rep)
    two = tower.add(1, 1)
    if tr == two:
        return 1
    assert tr == tower.neg(two) and tower.p != 2, "p-singular trace must be +-2"
    return tower.minus_one()


def dl_character(table: GroupTable, j: int) -> DLCharacter:
    """The j-th virtual character, j = 1..q mod q+1.

    Values on classes of order prime to p come from averaged fixed-point
    counts; the remaining classes get the closed-form rule: the value is
    theta_j at the central part, since the unipotent part contributes 1.
    """
    tower = table.tower
    q = tower.q
    if j % (q + 1) == 0:
        raise TrivialThetaRequested(j)
    theta = TorusChar(tower, j)
    values = []
    for cls in conjugacy_classes(table):
        if cls.p_regular:
            values.append(_averaged_value(table, theta, cls.rep))
        else:
            values.append(theta(_central_part(tower, cls.rep)))
    out = DLCharacter(table, values, theta.j)
    assert out.value_at(table.identity_index) == 1 - q
    return out


def dl_trivial_character(table: GroupTable) -> ClassFn:
    """Same averaging with the trivial character; a cross-check object."""
    theta = TorusChar(table.tower, 0)
    values = [_averaged_value(table, theta, cls.rep)
              for cls in conjugacy_classes(table)]
    return ClassFn(table, values, virtual=True)


def lefschetz_C(table: GroupTable, i: int) -> int:
    """Fixed-point number on the completed curve, for p-regular elements.

    Away from the identity this is the affine count plus the number of
    fixed points on the line at infinity, which the curve meets in the
    q+1 rational points of the projective line.
    """
    cls = conjugacy_classes(table)[class_positions(table)[i]]
    if not cls.p_regular:
        raise PSingularInput(f"element {i} has order {cls.element_order}")
    q = table.tower.q
    if i == table.identity_index:
        return 2 - q * (q - 1)
    return lefschetz_D(table.tower, table.elements[i]) + fixed_lines(table, i)

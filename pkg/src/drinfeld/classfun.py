"""Exact class functions on SL2(F_q) and the standard constructions.

Values are cyclotomic numbers in the shared field Q(zeta_N) attached to
the tower, so inner products, induction and conjugation all stay exact.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, field_for_tower
from .errors import ClassMismatch, NotClassFunctionOnSubgroup
from .fields import FieldTower
from .group import GroupTable, SubgroupData, class_positions, conjugacy_classes, subgroup_B, subgroup_U


class ClassFn:
    """A class function: one exact value per conjugacy class.

    The virtual flag records whether the function arose from integer
    combinations rather than directly as a permutation or induced
    character.  Arithmetic propagates it.
    """

    __slots__ = ("table", "field", "values", "virtual")

    def __init__(self, table: GroupTable, values, virtual: bool = False):
        self.table = table
        self.field = field_for_tower(table.tower)
        vals = tuple(self.field.coerce(v) for v in values)
        if len(vals) != len(conjugacy_classes(table)):
            raise ClassMismatch(
                f"{len(vals)} values for {len(conjugacy_classes(table))} classes")
        self.values = vals
        self.virtual = virtual

    def _check(self, other: "ClassFn"):
        if self.table is not other.table:
            raise ClassMismatch("class functions live on different groups")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k: int) -> CycNum:
        return self.values[k]

    def value_at(self, element_index: int) -> CycNum:
        """Value on the class containing the given element."""
        return self.values[class_positions(self.table)[element_index]]

    def __add__(self, other: "ClassFn") -> "ClassFn":
        self._check(other)
        return ClassFn(self.table,
                       [x + y for x, y in zip(self.values, other.values)],
                       virtual=True)

    def __sub__(self, other: "ClassFn") -> "ClassFn":
        self._check(other)
        return ClassFn(self.table,
                       [x - y for x, y in zip(self.values, other.values)],
                       virtual=True)

    def __neg__(self) -> "ClassFn":
        return ClassFn(self.table, [-x for x in self.values], virtual=True)

    def __mul__(self, scalar) -> "ClassFn":
        c = self.field.coerce(scalar)
        return ClassFn(self.table, [x * c for x in self.values], virtual=True)

    __rmul__ = __mul__

    def conj(self) -> "ClassFn":
        """Complex conjugation applied to every value."""
        return ClassFn(self.table, [x.conj() for x in self.values],
                       virtual=self.virtual)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClassFn) and self.table is other.table
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.table), self.values))

    def __repr__(self) -> str:
        kind = "virtual" if self.virtual else "plain"
        return f"ClassFn({kind}, {[v.approx_str() for v in self.values]})"


def trivial_character(table: GroupTable) -> ClassFn:
    return ClassFn(table, [1] * len(conjugacy_classes(table)))


def inner_product(f: ClassFn, h: ClassFn) -> CycNum:
    """Normalized Hermitian pairing (1/|G|) sum of size * f * conj(h)."""
    f._check(h)
    acc = f.field.zero
    for cls, a, b in zip(conjugacy_classes(f.table), f.values, h.values):
        acc = acc + a * b.conj() * cls.size
    return acc * Fraction(1, f.table.order)


def induce(table: GroupTable, sub: SubgroupData, values: dict) -> ClassFn:
    """Induce a class function from a subgroup to the whole group.

    values maps each subgroup member index to its value.  The standard
    double sum over the full group is used: the induced value on a
    class with representative x is (1/|H|) sum over g of the value at
    g x g^-1 whenever that conjugate lands in H.
    """
    member_set = sub.member_set
    if set(values) != set(member_set):
        raise NotClassFunctionOnSubgroup(
            "values must cover exactly the subgroup members")
    field = field_for_tower(table.tower)
    vals = {i: field.coerce(v) for i, v in values.items()}
    for s in sub.members:
        for h in sub.members:
            if vals[table.conj(s, h)] != vals[h]:
                raise NotClassFunctionOnSubgroup(
                    f"values are not constant under conjugation by member {s}")

    out = []
    inv_h = Fraction(1, len(sub.members))
    for cls in conjugacy_classes(table):
        acc = field.zero
        for g in range(table.order):
            y = table.conj(g, cls.rep_index)
            if y in member_set:
                acc = acc + vals[y]
        out.append(acc * inv_h)
    return ClassFn(table, out)


def _p1_lines(tower: FieldTower):
    """Representative vectors for the q+1 points of the projective line."""
    lines = [(1, s) for s in tower.fq_elements]
    lines.append((0, 1))
    return lines


def fixed_lines(table: GroupTable, i: int) -> int:
    """Number of projective-line points fixed by the given element."""
    tower = table.tower
    a, b, c, d = table.elements[i]
    count = 0
    for x, y in _p1_lines(tower):
        wx = tower.add(tower.mul(a, x), tower.mul(b, y))
        wy = tower.add(tower.mul(c, x), tower.mul(d, y))
        # (wx, wy) proportional to (x, y) exactly when the 2x2 determinant dies
        if tower.sub(tower.mul(wx, y), tower.mul(wy, x)) == 0:
            count += 1
    return count


def permutation_character_P1(table: GroupTable) -> ClassFn:
    """Character of the action on the projective line; rank two."""
    return ClassFn(table, [fixed_lines(table, cls.rep_index)
                           for cls in conjugacy_classes(table)])


def steinberg(table: GroupTable) -> ClassFn:
    """The q-dimensional constituent of the projective-line character."""
    values = [fixed_lines(table, cls.rep_index) - 1
              for cls in conjugacy_classes(table)]
    return ClassFn(table, values)


class AdditiveCharacter:
    """A nontrivial character of the additive group of F_q.

    psi_1 composes the trace to the prime field with a primitive p-th
    root of unity; psi_2 twists the argument by the canonical generator
    of the multiplicative group, which is a non-square exactly when q
    is odd.  For even q there is a single twist orbit and psi_2 equals
    psi_1.
    """

    __slots__ = ("label", "tower", "field", "values")

    def __init__(self, label: int, tower: FieldTower, twist: int):
        self.label = label
        self.tower = tower
        self.field = field_for_tower(tower)
        zeta = self.field.root_of_unity(tower.p)
        self.values = {
            x: zeta ** tower.trace_to_prime(tower.mul(twist, x))
            for x in tower.fq_elements
        }

    def __call__(self, x: int) -> CycNum:
        return self.values[x]

    def __eq__(self, other) -> bool:
        return isinstance(other, AdditiveCharacter) and self.values == other.values

    def __hash__(self):
        return hash(frozenset(self.values.items()))


def additive_characters(tower: FieldTower) -> tuple[AdditiveCharacter, AdditiveCharacter]:
    psi1 = AdditiveCharacter(1, tower, 1)
    twist = 1 if tower.q % 2 == 0 else tower.g1
    psi2 = AdditiveCharacter(2, tower, twist)
    return psi1, psi2


def gelfand_graev(table: GroupTable, i: int) -> ClassFn:
    """Character induced from an additive character of the unipotent radical."""
    if i not in (1, 2):
        raise ValueError("label must be 1 or 2")
    psi = additive_characters(table.tower)[i - 1]
    u = subgroup_U(table)
    values = {j: psi(table.elements[j][1]) for j in u.members}
    return induce(table, u, values)


def induced_from_borel_trivial(table: GroupTable) -> ClassFn:
    """Induction of the trivial character of the Borel subgroup."""
    b = subgroup_B(table)
    return induce(table, b, {j: 1 for j in b.members})

"""Tests for the averaged fixed-point characters and both Lefschetz counts.

The hard numbers here are cross-checked two independent ways: small
cases against hand-computed values, and the affine fixed-point counts
against brute-force point enumeration in a big enough extension field
where every relevant fixed point lives.
"""

import math

import pytest

from drinfeld.classfun import inner_product, steinberg, trivial_character
from drinfeld.dl import TorusChar, dl_character, dl_trivial_character, lefschetz_C, lefschetz_D
from drinfeld.errors import (
    InputNotInMu,
    PSingularInput,
    SingularMatrix,
    TrivialThetaRequested,
)
from drinfeld.fields import build_field_tower
from drinfeld.group import GroupTable, conjugacy_classes, mat_mul, scalar_action_matrix

_cache = {}


def table_for(q):
    if q not in _cache:
        _cache[q] = GroupTable(build_field_tower(q))
    return _cache[q]


def classes_of_order(table, n):
    return [k for k, c in enumerate(conjugacy_classes(table)) if c.element_order == n]


def split_regular_classes(table):
    # classes containing a diagonal matrix with distinct entries; the
    # canonical representative need not itself be diagonal
    out = []
    for k, c in enumerate(conjugacy_classes(table)):
        for i in c.members:
            a, b, cc, d = table.elements[i]
            if b == 0 and cc == 0 and a != d:
                out.append(k)
                break
    return out


# --- torus characters --------------------------------------------------------

def test_torus_char_basics():
    for q in (2, 3, 4):
        tower = build_field_tower(q)
        mu = tower.mu_subgroup()
        theta0 = TorusChar(tower, 0)
        assert all(theta0(t) == 1 for t in mu)
        for j in range(1, q + 1):
            theta = TorusChar(tower, j)
            assert any(theta(t) != 1 for t in mu)
            for t in mu:
                for s in mu:
                    assert theta(tower.mul(t, s)) == theta(t) * theta(s)
        t1, t2 = TorusChar(tower, 1), TorusChar(tower, q)
        prod = t1 * t2
        assert prod.j == (1 + q) % (q + 1) == 0


def test_torus_char_rejects_non_norm_one():
    tower = build_field_tower(3)
    with pytest.raises(InputNotInMu):
        TorusChar(tower, 1)(tower.g2)


# --- affine fixed-point counts ----------------------------------------------

def test_affine_count_at_identity():
    for q in (2, 3, 5):
        tower = build_field_tower(q)
        assert lefschetz_D(tower, (1, 0, 0, 1)) == 1 - q * q


def test_affine_count_nonunit_scalars_vanish():
    tower = build_field_tower(3)
    for t in tower.mu_subgroup():
        if t != 1:
            assert lefschetz_D(tower, (t, 0, 0, t)) == 0


def test_affine_count_rational_eigenline_vanishes():
    # unipotent elements fix a line defined over F_q, where the defining
    # form of the locus is identically zero
    for q in (2, 3, 4):
        tower = build_field_tower(q)
        for b in tower.fq_elements:
            if b != 0:
                assert lefschetz_D(tower, (1, b, 0, 1)) == 0
                assert lefschetz_D(tower, (1, 0, b, 1)) == 0


def test_affine_count_rejects_singular_input():
    tower = build_field_tower(2)
    with pytest.raises(SingularMatrix):
        lefschetz_D(tower, (1, 0, 0, 0))


def _embedding(small, big):
    """Field embedding of small's F_{q^2} into big's, verified additive.

    Candidate images of the generator are the generators of the unique
    subgroup of matching order; the right ones are exactly those that
    also respect addition.
    """
    step = big.n_units // small.n_units
    for k in range(1, small.n_units):
        if math.gcd(k, small.n_units) != 1:
            continue
        y = big.pow(big.g2, step * k)
        emb = {0: 0}
        for e in range(small.n_units):
            emb[small.pow(small.g2, e)] = big.pow(y, e)
        if all(emb[small.add(a, b)] == big.add(emb[a], emb[b])
               for a in range(small.q2) for b in range(small.q2)):
            return emb
    raise AssertionError("no additive embedding found")


def test_affine_count_against_plane_enumeration_q2():
    # every fixed point of a non-identity map lies in the degree-six
    # extension of the prime field, so the whole plane there is scannable
    t2 = build_field_tower(2)
    t8 = build_field_tower(8)  # the big field of this tower is F_64
    emb = _embedding(t2, t8)

    locus = []
    for x in range(t8.q2):
        for y in range(t8.q2):
            lhs = t8.sub(t8.mul(x, t8.pow(y, 2)), t8.mul(t8.pow(x, 2), y))
            if lhs == 1:
                locus.append((x, y))
    table = table_for(2)
    for t in t2.mu_subgroup():
        for g in table.elements:
            m = mat_mul(t2, scalar_action_matrix(t2, t), g)
            if m == (1, 0, 0, 1):
                continue
            a, b, c, d = (emb[e] for e in m)
            fixed = sum(
                1 for x, y in locus
                if t8.add(t8.mul(a, x), t8.mul(b, y)) == x
                and t8.add(t8.mul(c, x), t8.mul(d, y)) == y)
            assert fixed == lefschetz_D(t2, m)


def test_affine_count_against_line_enumeration_q3():
    # for q=3 the fixed points live in F_3^8; enumerate the fixed line
    # of each matrix there directly
    t3 = build_field_tower(3)
    t81 = build_field_tower(81, bound=81)  # big field F_3^8
    emb = _embedding(t3, t81)

    table = table_for(3)
    mats = []
    for cls in conjugacy_classes(table):
        for t in t3.mu_subgroup():
            m = mat_mul(t3, scalar_action_matrix(t3, t), cls.rep)
            if m != (1, 0, 0, 1):
                mats.append(m)
    for m in mats:
        kernel = [
            (x, y)
            for x in range(t3.q2) for y in range(t3.q2)
            if (x, y) != (0, 0)
            and t3.add(t3.mul(m[0], x), t3.mul(m[1], y)) == x
            and t3.add(t3.mul(m[2], x), t3.mul(m[3], y)) == y]
        if not kernel:
            assert lefschetz_D(t3, m) == 0
            continue
        x0, y0 = kernel[0]
        X0, Y0 = emb[x0], emb[y0]
        count = 0
        for lam in range(t81.q2):
            x, y = t81.mul(lam, X0), t81.mul(lam, Y0)
            lhs = t81.sub(t81.mul(x, t81.pow(y, 3)), t81.mul(t81.pow(x, 3), y))
            if lhs == 1:
                count += 1
        assert count == lefschetz_D(t3, m)


# --- the character family ----------------------------------------------------

def test_dimension_is_one_minus_q():
    for q in (2, 3, 4, 5):
        table = table_for(q)
        for j in range(1, q + 1):
            assert dl_character(table, j).value_at(table.identity_index) == 1 - q


def test_q2_family_is_minus_sign_character():
    # hand computation: classes ordered involutions, 3-cycles, identity
    table = table_for(2)
    r1 = dl_character(table, 1)
    r2 = dl_character(table, 2)
    assert list(r1.values) == [1, -1, -1]
    assert r1 == r2


def test_split_regular_classes_vanish():
    table = table_for(5)
    split = split_regular_classes(table)
    assert split
    for j in range(1, 6):
        r = dl_character(table, j)
        for k in split:
            assert r[k] == 0


def test_p_singular_values_q3():
    table = table_for(3)
    unipotent = classes_of_order(table, 3)
    mixed = classes_of_order(table, 6)
    assert len(unipotent) == 2 and len(mixed) == 2
    for j in (1, 2, 3):
        r = dl_character(table, j)
        for k in unipotent:
            assert r[k] == 1
        for k in mixed:
            assert r[k] == (-1) ** j


def test_conjugate_flips_the_index():
    for q in (2, 3, 4, 5):
        table = table_for(q)
        chars = {j: dl_character(table, j) for j in range(1, q + 1)}
        for j in range(1, q + 1):
            assert chars[j].conj() == chars[q + 1 - j]


def test_orthogonality_relations():
    for q in (2, 3, 4, 5):
        table = table_for(q)
        one = trivial_character(table)
        chars = {j: dl_character(table, j) for j in range(1, q + 1)}
        for j in range(1, q + 1):
            assert inner_product(chars[j], one) == 0
            for jp in range(1, q + 1):
                expected = int(j == jp) + int(j == q + 1 - jp)
                assert inner_product(chars[j], chars[jp]) == expected


def test_central_twist():
    for q in (3, 5):
        table = table_for(q)
        tower = table.tower
        neg = tower.minus_one()
        for j in range(1, q + 1):
            r = dl_character(table, j)
            sign = TorusChar(tower, j)(neg)
            assert sign == (-1) ** j
            for cls in conjugacy_classes(table):
                if not cls.p_regular:
                    continue
                minus_rep = tuple(tower.neg(e) for e in cls.rep)
                assert r.value_at(table.index[minus_rep]) == sign * r.value_at(cls.rep_index)


def test_values_are_integral_over_the_small_cyclotomic_ring():
    # denominators clear, and every value is fixed by the Galois action
    # that moves zeta_N while fixing zeta_(q+1)
    for q in (2, 3, 4):
        table = table_for(q)
        field = dl_character(table, 1).field
        fixers = [a for a in field.units if a % (q + 1) == 1]
        for j in range(1, q + 1):
            for v in dl_character(table, j).values:
                assert v.den == 1
                for a in fixers:
                    assert v.galois(a) == v


def test_trivial_index_is_rejected():
    table = table_for(3)
    with pytest.raises(TrivialThetaRequested):
        dl_character(table, 0)
    with pytest.raises(TrivialThetaRequested):
        dl_character(table, 4)


def test_trivial_theta_averaging_matches_one_minus_steinberg():
    for q in (2, 3, 4, 5):
        table = table_for(q)
        triv = dl_trivial_character(table)
        assert triv.value_at(table.identity_index) == 1 - q
        reference = trivial_character(table) - steinberg(table)
        for k, cls in enumerate(conjugacy_classes(table)):
            if cls.p_regular:
                assert triv[k] == reference[k]


# --- counts on the completed curve --------------------------------------------

def test_completed_count_identity():
    assert lefschetz_C(table_for(3), table_for(3).identity_index) == -4
    for q in (2, 4, 5):
        table = table_for(q)
        assert lefschetz_C(table, table.identity_index) == 2 - q * (q - 1)


def test_completed_count_three_cycle_q2():
    table = table_for(2)
    rep = conjugacy_classes(table)[classes_of_order(table, 3)[0]].rep_index
    assert lefschetz_C(table, rep) == 0


def test_completed_count_minus_identity():
    for q in (3, 5):
        table = table_for(q)
        tower = table.tower
        neg = tower.minus_one()
        idx = table.index[(neg, 0, 0, neg)]
        assert lefschetz_C(table, idx) == q + 1


def test_completed_count_rejects_p_singular():
    table = table_for(3)
    rep = conjugacy_classes(table)[classes_of_order(table, 3)[0]].rep_index
    with pytest.raises(PSingularInput):
        lefschetz_C(table, rep)


def test_completed_count_equals_two_plus_character_sum():
    for q in (2, 3, 4, 5):
        table = table_for(q)
        chars = [dl_character(table, j) for j in range(1, q + 1)]
        for cls in conjugacy_classes(table):
            if not cls.p_regular:
                continue
            total = chars[0].field.from_integer(2)
            for r in chars:
                total = total + r.value_at(cls.rep_index)
            assert total == lefschetz_C(table, cls.rep_index)

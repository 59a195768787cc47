"""Tests for symmetric-power Brauer characters and the decomposition solve."""

from fractions import Fraction

import pytest

from drinfeld.brauer import (
    BrauerFn,
    G0Vector,
    brauer_character_sym,
    brauer_character_sym_via_matrices,
    brauer_matrix,
    conj_brauer,
    decomposition_map,
    p_regular_classes,
    regular_character,
)
from drinfeld.classfun import ClassFn, gelfand_graev, induced_from_borel_trivial, steinberg, trivial_character, inner_product
from drinfeld.dl import dl_character
from drinfeld.errors import IndexOutOfRange, NonIntegralSolution
from drinfeld.fields import build_field_tower
from drinfeld.group import GroupTable, conjugacy_classes

_cache = {}


def table_for(q):
    if q not in _cache:
        _cache[q] = GroupTable(build_field_tower(q))
    return _cache[q]


def test_sym0_is_trivial():
    for q in (2, 3, 4, 5):
        f = brauer_character_sym(table_for(q), 0)
        assert all(v == 1 for v in f.values)


def test_identity_column_gives_dimensions():
    for q in (2, 3, 5):
        table = table_for(q)
        pr = p_regular_classes(table)
        id_pos = next(k for k, c in enumerate(pr)
                      if c.rep_index == table.identity_index)
        for i in range(q):
            assert brauer_character_sym(table, i)[id_pos] == i + 1


def test_frozen_q3_matrix_by_element_order():
    # hand-computed: eigenvalues 1,1 / -1,-1 / +-i across the three
    # p-regular classes give these lifted power sums
    table = table_for(3)
    pr = p_regular_classes(table)
    expected = {1: (1, 2, 3), 2: (1, -2, 3), 4: (1, 0, -1)}
    for pos, cls in enumerate(pr):
        col = tuple(brauer_character_sym(table, i)[pos] for i in range(3))
        assert col == expected[cls.element_order]


def test_index_bounds_enforced():
    table = table_for(3)
    with pytest.raises(IndexOutOfRange):
        brauer_character_sym(table, -1)
    with pytest.raises(IndexOutOfRange):
        brauer_character_sym(table, 3)
    with pytest.raises(IndexOutOfRange):
        brauer_character_sym_via_matrices(table, 3)


def test_values_are_algebraic_integers():
    table = table_for(5)
    for i in range(5):
        for v in brauer_character_sym(table, i).values:
            assert v.den == 1


def test_eigenvalue_route_matches_matrix_route():
    # the slow route shares nothing with the fast one past the class list
    for q in (2, 3, 4, 5):
        table = table_for(q)
        for i in range(q):
            assert brauer_character_sym(table, i) == \
                brauer_character_sym_via_matrices(table, i)


def test_conj_brauer_fixes_symmetric_powers():
    table = table_for(5)
    for i in range(5):
        f = brauer_character_sym(table, i)
        assert conj_brauer(f) == f
        assert conj_brauer(conj_brauer(f)) == f


def test_brauer_matrix_nonsingular_and_frozen_q3_det():
    # the determinant need not be rational (class columns can be permuted
    # by the Galois action), but it must be nonzero and the inverse real
    for q in (2, 3, 4, 5, 7, 8, 9):
        rows, inverse, det = brauer_matrix(table_for(q))
        assert not det.is_zero()
        n = len(rows)
        for r in range(n):
            for c in range(n):
                prod = rows[r][0] * inverse[0][c]
                for k in range(1, n):
                    prod = prod + rows[r][k] * inverse[k][c]
                assert prod == (1 if r == c else 0)
    _, _, det3 = brauer_matrix(table_for(3))
    assert abs(det3.as_integer()) == 16
    _, _, det2 = brauer_matrix(table_for(2))
    assert abs(det2.as_integer()) == 3


def test_decomposition_of_trivial():
    for q in (2, 3, 4, 5):
        table = table_for(q)
        d = decomposition_map(trivial_character(table))
        assert d.coeffs == (1,) + (0,) * (q - 1)


def test_decomposition_second_character_q3():
    table = table_for(3)
    d = decomposition_map(dl_character(table, 2))
    assert d.coeffs == (-2, 0, 0)


def test_decomposition_pattern_multiset():
    # each member of the family decomposes as minus a pair of basis
    # vectors with indices i-2 and q-i-1, an index -1 meaning zero;
    # only the multiset over j is pinned down
    for q in (2, 3, 4, 5):
        table = table_for(q)
        got = sorted(decomposition_map(dl_character(table, j)).coeffs
                     for j in range(1, q + 1))
        expected = []
        for i in range(1, q + 1):
            vec = [0] * q
            if i - 2 >= 0:
                vec[i - 2] -= 1
            if q - i - 1 >= 0:
                vec[q - i - 1] -= 1
            expected.append(tuple(vec))
        assert got == sorted(expected)


def test_decomposition_is_additive():
    table = table_for(5)
    st = steinberg(table)
    gg = gelfand_graev(table, 1)
    lhs = decomposition_map(st + gg)
    rhs = decomposition_map(st) + decomposition_map(gg)
    assert lhs.coeffs == rhs.coeffs


def test_borel_induction_decomposes_as_sum():
    for q in (2, 3, 4):
        table = table_for(q)
        d_ind = decomposition_map(induced_from_borel_trivial(table))
        d_sum = decomposition_map(trivial_character(table)) + \
            decomposition_map(steinberg(table))
        assert d_ind.coeffs == d_sum.coeffs


def test_dimension_compatibility():
    for q in (2, 3, 5):
        table = table_for(q)
        for chi in (trivial_character(table), steinberg(table),
                    gelfand_graev(table, 1), regular_character(table)):
            d = decomposition_map(chi)
            dim = sum(a * (i + 1) for i, a in enumerate(d.coeffs))
            assert chi.value_at(table.identity_index) == dim


def test_regular_character_values():
    table = table_for(2)
    reg = regular_character(table)
    assert reg.value_at(table.identity_index) == 6
    assert sum(1 for v in reg.values if v != 0) == 1
    assert inner_product(reg, trivial_character(table)) == 1
    table3 = table_for(3)
    assert regular_character(table3).value_at(table3.identity_index) == 24


def test_regular_character_is_q_times_induced_decomposition():
    for q in (2, 3, 4, 5):
        table = table_for(q)
        lhs = decomposition_map(regular_character(table))
        rhs = q * decomposition_map(gelfand_graev(table, 1))
        assert lhs.coeffs == rhs.coeffs
        assert lhs.coeffs == (q * decomposition_map(gelfand_graev(table, 2))).coeffs


def test_non_integral_solve_is_rejected():
    table = table_for(2)
    classes = conjugacy_classes(table)
    values = [1 if c.rep_index == table.identity_index else 0 for c in classes]
    with pytest.raises(NonIntegralSolution):
        decomposition_map(ClassFn(table, values))
    halves = ClassFn(table, [Fraction(1, 2)] * len(classes))
    with pytest.raises(NonIntegralSolution):
        decomposition_map(halves)


def test_g0vector_arithmetic():
    a = G0Vector((1, -2, 0))
    b = G0Vector((0, 1, 1))
    assert (a + b).coeffs == (1, -1, 1)
    assert (-a).coeffs == (-1, 2, 0)
    assert (3 * a).coeffs == (3, -6, 0)

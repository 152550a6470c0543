from math import comb, log2

import pytest

from dopekit.counting import (
    bound_fixed_tuple,
    bound_pairwise,
    bound_zero_patterns,
    bound_zero_patterns_relaxed,
    burnside_two_row,
    count_B,
    count_B_recursive,
    count_C,
    count_C_recursive,
    count_two_row_up_to_swap,
    erc_lower_bound_construction,
    zero_pattern_degree,
)
from dopekit.dope import all_matrices, condition_T
from dopekit.enumeration import count_dope, enumerate_generic, generic_nodes


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def test_closed_forms_match_recurrences():
    for n in range(1, 13):
        for t in range(-1, n + 3):
            assert count_C(n, t) == count_C_recursive(n, t)
            if n >= 2 and t <= n:  # t = n + 1 is cut off by the tail condition
                assert count_C(n, t) == count_C(n - 1, t) + 2 * count_C(n - 1, t - 1) + count_C(n - 1, t - 2)
        for s in range(-1, n + 2):
            assert count_B(n, s) == count_B_recursive(n, s)
            if n >= 2 and 2 * s <= n:
                assert count_B(n, s) == count_B(n - 1, s) + count_B(n - 1, s - 1)


def test_C_examples():
    for n in range(1, 11):
        assert count_C(n, 0) == 1
        assert count_C(n, n) == catalan(n + 1)
        assert sum(count_C(n, t) for t in range(n + 2)) == comb(2 * n + 1, n)


def test_C_by_enumeration():
    for n in range(1, 5):
        for t in range(n + 2):
            assert count_C(n, t) == sum(1 for D in all_matrices(2, n) if condition_T(D) and D.count() == t)


def test_B_examples():
    assert count_B(4, 0) == 1
    assert all(count_B(0, s) == 0 for s in range(1, 4))
    assert count_B(4, 2) == 2
    same = sum(1 for D in all_matrices(2, 4) if D.rows[0] == D.rows[1] and condition_T(D) and D.count() == 4)
    assert same == 2


def test_swap_quotient():
    assert count_two_row_up_to_swap(1) == 2
    assert count_two_row_up_to_swap(2) == 6
    for n in range(1, 13):
        assert count_two_row_up_to_swap(n) == burnside_two_row(n)
    for n in range(1, 7):
        orbits = {min(D.bitstring(), D.swap_rows().bitstring()) for D in enumerate_generic(2, n)}
        assert len(orbits) == count_two_row_up_to_swap(n)


def test_pairwise():
    for n in range(1, 8):
        assert bound_pairwise(2, n) == comb(2 * n + 1, n)
    assert bound_pairwise(4, 1) == 9
    b = bound_pairwise(3, 6)
    assert b == 71085
    assert (b - 1) ** 2 < 1716 ** 3 <= b ** 2
    assert b >= 17060


def test_zero_patterns():
    assert bound_zero_patterns(3, 2) == 120
    assert zero_pattern_degree(3, 2) == 2 * 2 + 1 * 2 * 3 // 2
    for n in range(2, 7):
        assert bound_zero_patterns(3, n) >= count_dope(generic_nodes(3), n)
        assert bound_zero_patterns_relaxed(3, n) > 0
    with pytest.raises(ValueError):
        bound_zero_patterns(2, 3)
    with pytest.raises(ValueError):
        bound_zero_patterns(3, 1)


def test_fixed_tuple():
    assert bound_fixed_tuple(3, 6) == sum(comb(18, i) for i in range(7)) == 31180
    assert bound_fixed_tuple(3, 0) == 1
    for m in range(3, 7):
        for n in range(1, 12):
            b = bound_fixed_tuple(m, n)
            assert log2(b) <= b.approx_log2 + 1e-9


def test_erc_construction():
    assert erc_lower_bound_construction(2) == 4
    assert erc_lower_bound_construction(4) > 0
    e = erc_lower_bound_construction(12)
    assert e.approx_log2 > log2(e)
    with pytest.raises(ValueError):
        erc_lower_bound_construction(3)
    with pytest.raises(ValueError):
        erc_lower_bound_construction(22)

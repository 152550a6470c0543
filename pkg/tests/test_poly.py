from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from dopekit.forms import NodeTuple, build_forms, evaluate_form
from dopekit.poly import Poly, crt_interpolate, derivative, taylor_shift
from dopekit.scalars import QQ, QuadraticField

Q2 = QuadraticField(2)
x = Poly.x()
coeff_lists = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), max_size=8)


def test_derivative_examples():
    assert derivative(x ** 3, 1) == 3 * x ** 2
    assert derivative(x ** 3, 4).is_zero
    assert derivative(x ** 3, 0) == x ** 3
    assert Poly(()).degree == float("-inf")


def test_taylor_shift_examples():
    assert taylor_shift(x ** 2, 1) == x ** 2 + 2 * x + 1
    p = x ** 3 - x
    assert taylor_shift(p, 0) == p
    assert list(taylor_shift(p, 1).coeffs) == [0, 2, 3, 1]


@given(coeff_lists, st.fractions(min_value=-5, max_value=5, max_denominator=4))
def test_taylor_round_trip(cs, c):
    p = Poly(cs, QQ)
    assert taylor_shift(taylor_shift(p, c), -c) == p
    q = taylor_shift(p, c)
    for j in range(len(cs)):
        expected = sum(comb(k, j) * c ** (k - j) * a for k, a in enumerate(cs) if k >= j)
        assert q[j] == expected


@given(coeff_lists)
def test_taylor_round_trip_quadratic(cs):
    p = Poly([Q2(a, a / 2) for a in cs], Q2)
    assert taylor_shift(taylor_shift(p, Q2.sqrt), -Q2.sqrt) == p


@given(coeff_lists, coeff_lists, st.integers(0, 4))
def test_derivative_linear(a, b, j):
    p, q = Poly(a, QQ), Poly(b, QQ)
    assert derivative(p + q, j) == derivative(p, j) + derivative(q, j)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6), st.integers(0, 5))
def test_derivative_coefficients_match_forms(cs, j):
    n = len(cs) - 1
    d = derivative(Poly(cs, QQ), j)
    for k in range(j, n + 1):
        assert d[k - j] == comb(k, j) * factorial(j) * cs[k]


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=9), st.integers(-3, 3))
def test_form_evaluation(cs, lam):
    n = len(cs) - 1
    p = Poly(cs, QQ)
    forms = build_forms(NodeTuple([lam]), n)
    for j in range(n + 1):
        assert evaluate_form(forms[0][j], cs) * factorial(j) == derivative(p, j)(lam)


def test_crt_examples():
    zero = Poly(())
    one = Poly([1])
    assert crt_interpolate([(0, 2, zero), (1, 2, one)]) == 3 * x ** 2 - 2 * x ** 3
    assert crt_interpolate([(0, 3, x + 1)]) == x + 1
    assert crt_interpolate([(0, 1, one), (1, 1, zero)]) == 1 - x


def test_crt_errors():
    with pytest.raises(ValueError):
        crt_interpolate([(0, 1, Poly([1])), (0, 2, Poly([1]))])
    with pytest.raises(ValueError):
        crt_interpolate([(0, 1, x)])


@given(st.lists(st.lists(st.integers(-5, 5), max_size=3), min_size=1, max_size=3))
def test_crt_reproduces_residues(rs):
    data = [(Fraction(i), 3, Poly(r, QQ)) for i, r in enumerate(rs)]
    P = crt_interpolate(data)
    assert P.degree < 3 * len(rs)
    for root, power, res in data:
        got = P.taylor_coefficients(root)[:power]
        want = res.taylor_coefficients(root)[:power]
        assert list(got) + [0] * (power - len(got)) == list(want) + [0] * (power - len(want))


def test_json_round_trip():
    p = Poly([Q2(1, 2), Q2(0), Q2(Fraction(-1, 3), 1)], Q2)
    assert Poly.from_json(p.to_json()) == p
    assert Poly.from_json({"coeffs": []}).is_zero

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from dopekit.linalg import ExactMatrix, SingularMatrixError, det, in_span, nullspace, rank, rref, solve
from dopekit.scalars import QQ, GenericField, QuadraticField

Q2 = QuadraticField(2)
G1 = GenericField(1)

entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def _sym(rows):
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows])


def test_examples():
    assert rank(ExactMatrix.identity(3)) == 3
    assert rank(ExactMatrix.zeros(2, 4)) == 0
    lam = G1.gen(1)
    assert rank(ExactMatrix([[1, lam, lam * lam], [1, 2 * lam, 3 * lam * lam]], G1)) == 2
    assert nullspace(ExactMatrix.identity(3)) == []
    assert nullspace(ExactMatrix([[1, 1]])) == [(1, -1)]


def test_in_span_examples():
    assert in_span((0, 0), [])
    assert not in_span((0, 0, 1), [(1, 0, 0), (0, 1, 0)])
    assert in_span((2, 3, 0), [(1, 0, 0), (0, 1, 0)])


@given(matrices())
def test_rank_det_nullspace_against_sympy(rows):
    M = ExactMatrix(rows, QQ)
    S = _sym(rows)
    assert rank(M) == S.rank()
    ker = nullspace(M)
    assert rank(M) + len(ker) == M.ncols
    for v in ker:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    if M.nrows == M.ncols:
        assert det(M) == S.det()


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 3), st.data())
def test_low_rank_products(r, c, k, data):
    A = data.draw(st.lists(st.lists(entries, min_size=k, max_size=k), min_size=r, max_size=r))
    B = data.draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=k, max_size=k))
    rows = [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(c)] for i in range(r)]
    assert rank(ExactMatrix(rows, QQ)) == _sym(rows).rank()


@given(matrices())
def test_nullspace_reduced_column_echelon(rows):
    ker = nullspace(ExactMatrix(rows, QQ))
    leads = []
    for v in ker:
        c = next(k for k, x in enumerate(v) if x)
        assert v[c] == 1
        leads.append(c)
    for v, c in zip(ker, leads):
        for w in ker:
            if w is not v:
                assert w[c] == 0


@given(matrices(), st.data())
def test_rank_invariances(rows, data):
    M = ExactMatrix(rows, QQ)
    i = data.draw(st.integers(0, len(rows) - 1))
    j = data.draw(st.integers(0, len(rows) - 1))
    s = data.draw(st.fractions(min_value=1, max_value=5, max_denominator=3))
    swapped = list(rows)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    scaled = [list(r) for r in rows]
    scaled[i] = [v * s for v in scaled[i]]
    assert rank(ExactMatrix(swapped, QQ)) == rank(M) == rank(ExactMatrix(scaled, QQ))


@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=3, max_size=3))
def test_quadratic_det_matches_sympy(rows):
    M = ExactMatrix([[Q2(a, b) for a, b in zip(r, reversed(r))] for r in rows], Q2)
    S = sympy.Matrix([[sympy.Rational(a.numerator, a.denominator) + sympy.Rational(b.numerator, b.denominator) * sympy.sqrt(2)
                       for a, b in zip(r, reversed(r))] for r in rows])
    d = det(M)
    assert sympy.expand(S.det() - (sympy.Rational(d.a.numerator, d.a.denominator) + sympy.Rational(d.b.numerator, d.b.denominator) * sympy.sqrt(2))) == 0
    assert (rank(M) == 3) == bool(d)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=2, max_size=4),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_generic_rank_vs_substitution(rows, subs):
    t = G1.gen(1)
    grid = [[a + b * t + c * t * t for a, b, c in zip(r, r[1:] + r[:1], r[2:] + r[:2])] for r in rows]
    r_gen = rank(ExactMatrix(grid, G1))
    for s in subs:
        plugged = [[Fraction(v.value.numer(s)) for v in row] for row in grid]
        assert rank(ExactMatrix(plugged, QQ)) <= r_gen
    # the substitution attains the generic rank for all but finitely many values
    assert any(rank(ExactMatrix([[Fraction(v.value.numer(s)) for v in row] for row in grid], QQ)) == r_gen
               for s in range(20, 40))


def test_solve():
    M = ExactMatrix([[2, 1], [1, 3]])
    assert solve(M, [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    with pytest.raises(SingularMatrixError):
        solve(ExactMatrix([[1, 1], [1, 1]]), [1, 2])
    with pytest.raises(SingularMatrixError):
        solve(ExactMatrix([[1, 1], [1, 1]]), [1, 1])
    with pytest.raises(ValueError):
        solve(M, [1])


def test_rref():
    R, piv = rref(ExactMatrix([[2, 4, 2], [1, 2, 3]]))
    assert piv == [0, 2]
    assert [list(r) for r in R] == [[1, 2, 0], [0, 0, 1]]

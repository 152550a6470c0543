"""Closed-form counts and upper bounds as exact integers.

``C(n, t)`` counts ``2 x (n+1)`` matrices satisfying the tail condition with
``t`` ones; ``B(n, 2s)`` counts those with two identical rows and ``2s`` ones.
Bounds come as exact integers, each with a ``log2`` of its smooth relaxation
(floats, approximate, never compared for equality).
"""

from __future__ import annotations

from math import comb, e, isqrt, log2, pi


class Bound(int):
    """An exact bound that also carries ``log2`` of its smooth relaxation."""

    def __new__(cls, value: int, approx_log2: float, label: str = ""):
        obj = super().__new__(cls, value)
        obj.approx_log2 = approx_log2
        obj.label = label
        return obj

    @property
    def value(self) -> int:
        return int(self)

    def __repr__(self):
        return f"Bound({int(self)}, approx_log2={self.approx_log2:.4f})"

    def to_json(self):
        return {"value": str(int(self)), "approx_log2": self.approx_log2, "label": self.label}


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def count_C(n: int, t: int) -> int:
    """Two-row tail-condition matrices of width ``n+1`` with exactly ``t`` ones."""
    if n < 0 or t < 0:
        return 0
    if n == 0:
        return 1 if t == 0 else 0
    if t > n + 1:
        return 0
    return _binom(2 * n + 1, t) - _binom(2 * n + 1, t - 1)


def count_C_recursive(n: int, t: int) -> int:
    """Same numbers by conditioning on the first column."""
    table = {0: {0: 1}}
    for k in range(1, n + 1):
        prev = table[k - 1]
        table[k] = {
            s: prev.get(s, 0) + 2 * prev.get(s - 1, 0) + prev.get(s - 2, 0)
            for s in range(k + 1)
        }
    return table[n].get(t, 0) if n >= 0 else 0


def count_B(n: int, s: int) -> int:
    """Identical-row tail-condition matrices of width ``n+1`` with ``2s`` ones."""
    if n < 0 or s < 0:
        return 0
    if n == 0:
        return 1 if s == 0 else 0
    return max(_binom(n, s) - _binom(n, s - 1), 0)


def count_B_recursive(n: int, s: int) -> int:
    # a shared row of width k+1 holds at most k/2 ones before the tail fails
    ways = {0: 1}
    for k in range(1, n + 1):
        ways = {j: ways.get(j, 0) + ways.get(j - 1, 0) for j in range(k // 2 + 1)}
    return ways.get(s, 0) if n >= 0 else 0


def count_two_row_up_to_swap(n: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    total = _binom(2 * n + 1, n) + _binom(n, n // 2)
    return total // 2


def burnside_two_row(n: int) -> int:
    fixed = sum(count_B(n, s) for s in range(n // 2 + 2))
    return (sum(count_C(n, t) for t in range(n + 2)) + fixed) // 2


def _ceil_sqrt(x: int) -> int:
    r = isqrt(x)
    return r if r * r == x else r + 1


def bound_pairwise(m: int, n: int) -> Bound:
    """``ceil(binom(2n+1, n) ** (m/2))``, computed exactly."""
    if m < 2 or n < 1:
        raise ValueError("need m >= 2 and n >= 1")
    value = _ceil_sqrt(comb(2 * n + 1, n) ** m)
    approx = (m / 2) * log2(2 / (pi * n) ** 0.5) + m * n
    return Bound(value, approx, "(2/sqrt(pi n))^(m/2) 2^(mn)")


def zero_pattern_degree(m: int, n: int) -> int:
    """Total degree of the polynomial system behind the zero-pattern bound."""
    return 2 * n + (m - 2) * n * (n + 1) // 2


def bound_zero_patterns(m: int, n: int) -> Bound:
    if m < 3 or n < 2:
        raise ValueError("zero-pattern bound needs m >= 3 and n >= 2")
    value = comb(n + m - 2 + zero_pattern_degree(m, n), m + n - 2)
    approx = (m + n) * log2(e * m * n)
    return Bound(value, approx, "2^((m+n) log2(e m n))")


def bound_zero_patterns_relaxed(m: int, n: int) -> int:
    """The coarser ``binom(m n^2, m + n)``."""
    if m < 3 or n < 2:
        raise ValueError("zero-pattern bound needs m >= 3 and n >= 2")
    return comb(m * n * n, m + n)


def entropy(p: float) -> float:
    if p in (0, 1):
        return 0.0
    return -p * log2(p) - (1 - p) * log2(1 - p)


def bound_fixed_tuple(m: int, n: int) -> Bound:
    if m < 3 or n < 0:
        raise ValueError("fixed-tuple bound needs m >= 3 and n >= 0")
    value = sum(comb(m * n, i) for i in range(n + 1))
    return Bound(value, m * n * entropy(1 / m), "2^(mn H(1/m))")


def erc_lower_bound_construction(n: int) -> Bound:
    """Size of the checkerboard family of ERC supports.

    ``approx_log2`` carries ``4n log2(en)`` for comparison with ``log2`` of the count.
    """
    if n % 2 or n < 0 or n > 20:
        raise ValueError("n must be even and at most 20")
    half = n // 2
    value = 1
    for j in range(n):
        value *= sum(_binom(half, k) for k in range(n - j + 1))
    approx = 4 * n * log2(e * n) if n else 0.0
    return Bound(value, approx, "4n log2(en)")

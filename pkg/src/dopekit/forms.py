"""Linear forms attached to a node tuple.

For nodes ``lam[0..m-1]`` and degree ``n`` the form at position ``(i, j)`` is
the vector ``(binom(k, j) * lam[i]**(k - j))_k`` in ``K^(n+1)``.  Paired with
the coefficient vector of ``P`` it gives ``P^(j)(lam[i]) / j!``, so the
1-positions of a dope matrix are exactly the forms that vanish on ``P``.

Positions are 0-based ``(row, column)`` pairs throughout.
"""

from __future__ import annotations

from math import comb

from .linalg import SpanBasis
from .scalars import QQ, common_field


class NodeTuple:
    """Pairwise distinct scalars in one field."""

    __slots__ = ("entries", "field")

    def __init__(self, entries, field=None):
        entries = list(entries)
        if field is None:
            field = common_field(entries)
        entries = tuple(field(v) for v in entries)
        for i in range(len(entries)):
            for j in range(i):
                if entries[i] == entries[j]:
                    raise ValueError(f"nodes {j} and {i} coincide ({entries[i]})")
        self.entries = entries
        self.field = field

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        return isinstance(other, NodeTuple) and self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "NodeTuple(" + ", ".join(str(v) for v in self.entries) + ")"

    def affine(self, a, b) -> "NodeTuple":
        """``a + b*lam`` entrywise."""
        if not b:
            raise ValueError("affine map must have nonzero slope")
        return NodeTuple([a + b * v for v in self.entries], self.field)

    def to_json(self) -> list:
        return [self.field.to_json(v) for v in self.entries]


def form(lam, j: int, n: int, field=QQ) -> tuple:
    """The vector of ``a -> P^(j)(lam) / j!`` in coefficient coordinates."""
    lam = field(lam)
    out = [field.zero] * (n + 1)
    power = field.one
    for k in range(j, n + 1):
        out[k] = comb(k, j) * power
        power = power * lam
    return tuple(out)


def build_forms(nodes: NodeTuple, n: int) -> list[list[tuple]]:
    """``forms[i][j]`` for every position of an ``m x (n+1)`` grid."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return [[form(lam, j, n, nodes.field) for j in range(n + 1)] for lam in nodes]


def top_vector(n: int, field=QQ) -> tuple:
    """``(0, ..., 0, 1)``, the form of every position in the last column."""
    return tuple([field.zero] * n + [field.one])


def evaluate_form(f, coeffs):
    acc = 0
    for a, b in zip(f, coeffs):
        if a:
            acc = acc + a * b
    return acc


def positions(m: int, n: int):
    return [(i, j) for i in range(m) for j in range(n + 1)]


def span_of(E, forms, field) -> SpanBasis:
    dim = len(forms[0][0]) if forms and forms[0] else 0
    return SpanBasis(field, dim, [forms[i][j] for i, j in sorted(E)])


def closure(E, forms, field=None) -> frozenset:
    """All positions whose form lies in the span of the forms over ``E``."""
    if not forms:
        return frozenset()
    if field is None:
        field = common_field(forms[0][0])
    basis = span_of(E, forms, field)
    out = set(E)
    for i, row in enumerate(forms):
        for j, f in enumerate(row):
            if (i, j) not in out and f in basis:
                out.add((i, j))
    return frozenset(out)


def contains_top(E, forms, field) -> bool:
    n = len(forms[0]) - 1
    return top_vector(n, field) in span_of(E, forms, field)

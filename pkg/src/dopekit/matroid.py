"""The vector matroid of the forms ``L[i][j]`` on the grid ``m x (n+1)``.

A subset of positions is independent when its forms are linearly independent.
Flats missing the last column are exactly the 1-sets of dope matrices.
"""

from __future__ import annotations

import threading

from .enumeration import flat_lattice
from .forms import NodeTuple, build_forms
from .linalg import SpanBasis


def _sort_key(S):
    return len(S), sorted(S)


class MatroidView:
    """Read-only view with a memoised rank function."""

    def __init__(self, nodes: NodeTuple, n: int):
        if n < 0:
            raise ValueError("degree must be nonnegative")
        self.nodes = nodes
        self.n = n
        self.field = nodes.field
        self.forms = build_forms(nodes, n)
        self.ground = tuple((i, j) for i in range(len(nodes)) for j in range(n + 1))
        self._index = {p: k for k, p in enumerate(self.ground)}
        self._ranks = {}
        self._lock = threading.Lock()

    def _check(self, S):
        S = frozenset(S)
        bad = S - set(self.ground)
        if bad:
            raise ValueError(f"positions outside the ground set: {sorted(bad)}")
        return S

    def vector(self, p):
        i, j = p
        return self.forms[i][j]

    def rank(self, S) -> int:
        S = self._check(S)
        r = self._ranks.get(S)
        if r is None:
            r = SpanBasis(self.field, self.n + 1, [self.vector(p) for p in sorted(S)]).rank
            with self._lock:
                self._ranks[S] = r
        return r

    def is_independent(self, S) -> bool:
        S = self._check(S)
        return self.rank(S) == len(S)

    def closure(self, S) -> frozenset:
        S = self._check(S)
        basis = SpanBasis(self.field, self.n + 1, [self.vector(p) for p in sorted(S)])
        return frozenset(p for p in self.ground if p in S or self.vector(p) in basis)

    def is_flat(self, S) -> bool:
        return self.closure(S) == frozenset(S)

    def all_flats(self, contract_top: bool = False, cap=None) -> list[frozenset]:
        """Every flat, or with ``contract_top`` every flat of ``M / (0, n)``.

        Flats of the contraction are the sets ``F - {(0, n)}`` for flats ``F``
        of the matroid that contain ``(0, n)``.
        """
        if not contract_top:
            elems = list(self.ground)
            vectors = [self.vector(p) for p in elems]
            dim = self.n + 1
        else:
            # contracting v0 = e_n amounts to dropping the last coordinate
            top = (0, self.n)
            elems = [p for p in self.ground if p != top]
            vectors = [self.vector(p)[: self.n] for p in elems]
            dim = self.n
        out = []
        for mask, _ in flat_lattice(vectors, self.field, dim, cap=cap):
            out.append(frozenset(elems[k] for k in range(len(elems)) if mask >> k & 1))
        out.sort(key=_sort_key)
        return out

    def dope_flats(self, cap=None) -> list[frozenset]:
        """Flats avoiding the last column."""
        return [F for F in self.all_flats(False, cap) if all(j < self.n for _, j in F)]

"""Exact matrices: rank, nullspace, determinant, solve, span membership.

Elimination is fraction-free (Bareiss) over the integral ring attached to the
field -- integers for QQ, integer polynomials for generic fields -- and only
the final back-substitution touches field division.  Pivots are the first
nonzero entry in column order.
"""

from __future__ import annotations

from .scalars import QQ, common_field


class SingularMatrixError(ValueError):
    pass


class ExactMatrix:
    __slots__ = ("entries", "nrows", "ncols", "field")

    def __init__(self, rows, field=None, ncols=None):
        rows = [list(r) for r in rows]
        if field is None:
            field = common_field(v for r in rows for v in r)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.entries = tuple(tuple(field(v) for v in r) for r in rows)
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field

    @classmethod
    def identity(cls, n, field=QQ):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def zeros(cls, r, c, field=QQ):
        return cls([[0] * c for _ in range(r)], field, c)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, {self.field!r})"


def _ring_rows(M: ExactMatrix):
    return [M.field.ring_row(r) for r in M.entries]


def _bareiss(field, rows, ncols):
    """Fraction-free row echelon form. Returns (rows, pivot columns, swap parity)."""
    a = [list(r) for r in rows]
    m = len(a)
    prev = None
    r = 0
    pivots = []
    swaps = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            swaps += 1
        p = a[r][c]
        top = a[r]
        for i in range(r + 1, m):
            row = a[i]
            x = row[c]
            for j in range(c + 1, ncols):
                v = p * row[j] - x * top[j]
                row[j] = field.exquo(v, prev) if prev is not None else v
            row[c] = row[c] * 0
        prev = p
        pivots.append(c)
        r += 1
    return a, pivots, swaps


def rank(M: ExactMatrix) -> int:
    _, pivots, _ = _bareiss(M.field, _ring_rows(M), M.ncols)
    return len(pivots)


def det(M: ExactMatrix):
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    f = M.field
    n = M.nrows
    if n == 0:
        return f.one
    rows = _ring_rows(M)
    a, pivots, swaps = _bareiss(f, rows, n)
    if len(pivots) < n:
        return f.zero
    value = f.from_ring(a[n - 1][n - 1])
    # undo the per-row scaling done by ring_row
    for orig, scaled in zip(M.entries, rows):
        j = next(k for k, v in enumerate(orig) if v)
        value = value * orig[j] / f.from_ring(scaled[j])
    return -value if swaps % 2 else value


def _rref(field, rows, ncols):
    """Reduced row echelon form over the field. Returns (rows, pivots)."""
    a, pivots, _ = _bareiss(field, rows, ncols)
    out = []
    for r, c in enumerate(pivots):
        row = [field.from_ring(v) for v in a[r]]
        inv = 1 / row[c]
        out.append([v * inv for v in row])
    for r in range(len(out) - 1, -1, -1):
        c = pivots[r]
        for s in range(r):
            x = out[s][c]
            if x:
                out[s] = [u - x * v for u, v in zip(out[s], out[r])]
    return out, pivots


def rref(M: ExactMatrix):
    out, pivots = _rref(M.field, _ring_rows(M), M.ncols)
    return ExactMatrix(out, M.field, M.ncols), pivots


def nullspace(M: ExactMatrix) -> list[tuple]:
    """Basis of the right kernel as a reduced column echelon family.

    Each basis vector has a leading 1 whose coordinate vanishes in all the
    other basis vectors.
    """
    f = M.field
    n = M.ncols
    R, pivots = _rref(f, _ring_rows(M), n)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [f.zero] * n
        v[fc] = f.one
        for row, pc in zip(R, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    if not basis:
        return []
    reduced, _ = _rref(f, [f.ring_row(v) for v in basis], n)
    return [tuple(v) for v in reduced]


def solve(M: ExactMatrix, b) -> list:
    """The unique ``x`` with ``M x = b``; raises if none or many."""
    f = M.field
    n = M.ncols
    b = list(b)
    if len(b) != M.nrows:
        raise ValueError("right-hand side length mismatch")
    aug = [list(r) + [f(v)] for r, v in zip(M.entries, b)]
    R, pivots = _rref(f, [f.ring_row(r) for r in aug], n + 1)
    if pivots and pivots[-1] == n:
        raise SingularMatrixError("inconsistent system")
    if len(pivots) < n:
        raise SingularMatrixError("solution is not unique")
    return [row[n] for row in R]


class SpanBasis:
    """Incrementally echelonised span of vectors, kept in ring form.

    Every stored vector is primitive, so equal directions have equal keys.
    """

    __slots__ = ("field", "dim", "rows")

    def __init__(self, field, dim, vectors=()):
        self.field = field
        self.dim = dim
        self.rows = []
        for v in vectors:
            self.add(v)

    def residual_ring(self, r):
        prim = self.field.primitive
        r = prim(r)
        for c, b in self.rows:
            x = r[c]
            if x:
                p = b[c]
                r = prim([p * ri - x * bi for ri, bi in zip(r, b)])
        return r

    def residual(self, v):
        return self.residual_ring(self.field.ring_row(v))

    def add(self, v) -> bool:
        r = self.residual(v)
        c = next((k for k, x in enumerate(r) if x), None)
        if c is None:
            return False
        self.rows.append((c, r))
        return True

    def __contains__(self, v) -> bool:
        return not any(self.residual(v))

    @property
    def rank(self) -> int:
        return len(self.rows)


def in_span(v, S, field=None) -> bool:
    if field is None:
        field = common_field(list(v) + [x for s in S for x in s])
    return v in SpanBasis(field, len(v), S)

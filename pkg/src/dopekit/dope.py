"""Dope matrices and the constructions around them.

``dope_matrix_of(P, lam)`` records which derivatives ``P^(j)`` vanish at
which node.  This module also converts to multiplicity matrices, checks the
row/column/tail conditions, builds realising polynomials (two-row
characterisation and the general subspace criterion), solves the extension
problem with the Chinese remainder theorem, and carries the two classical
checks used along the way (Polya poisedness, binomial determinants).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

from .forms import NodeTuple, build_forms, closure, evaluate_form, span_of, top_vector
from .linalg import ExactMatrix, det, nullspace
from .poly import Poly, crt_interpolate
from .scalars import QQ


class NotDopeError(ValueError):
    """The matrix cannot be realised by any polynomial."""


def _parse_rows(rows, allowed):
    out = []
    for r in rows:
        if isinstance(r, str):
            r = [int(ch) for ch in r]
        r = tuple(int(v) for v in r)
        if any(v not in allowed for v in r):
            raise ValueError(f"entries must lie in {sorted(allowed)}: {r}")
        out.append(r)
    if len({len(r) for r in out}) > 1:
        raise ValueError("ragged matrix")
    if out and not out[0]:
        raise ValueError("matrix needs at least one column")
    return tuple(out)


@dataclass(frozen=True, order=True)
class DopeMatrix:
    """A 0/1 grid; ``rows[i][j] = 1`` means ``P^(j)`` vanishes at node ``i``."""

    rows: tuple

    def __init__(self, rows):
        object.__setattr__(self, "rows", _parse_rows(rows, {0, 1}))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else -1

    @classmethod
    def from_positions(cls, E, m, n) -> "DopeMatrix":
        return cls([[1 if (i, j) in E else 0 for j in range(n + 1)] for i in range(m)])

    @classmethod
    def zeros(cls, m, n) -> "DopeMatrix":
        return cls([[0] * (n + 1) for _ in range(m)])

    def ones(self) -> frozenset:
        return frozenset((i, j) for i, r in enumerate(self.rows) for j, v in enumerate(r) if v)

    def count(self) -> int:
        return sum(map(sum, self.rows))

    def bitstring(self) -> str:
        return "".join("".join(map(str, r)) for r in self.rows)

    def swap_rows(self) -> "DopeMatrix":
        return DopeMatrix(self.rows[::-1])

    def prefix(self, ncols: int) -> "DopeMatrix":
        return DopeMatrix([r[:ncols] for r in self.rows])

    def to_json(self) -> dict:
        return {"rows": ["".join(map(str, r)) for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "DopeMatrix":
        if set(obj) != {"rows"}:
            raise ValueError(f"bad dope matrix literal {obj!r}")
        if not all(isinstance(r, str) for r in obj["rows"]):
            raise ValueError("rows must be 0/1 strings")
        return cls(obj["rows"])

    def __str__(self):
        return "\n".join("".join(map(str, r)) for r in self.rows)


@dataclass(frozen=True)
class MultiplicityMatrix:
    rows: tuple

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if len({len(r) for r in rows}) > 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else -1

    def support(self) -> DopeMatrix:
        return DopeMatrix([[1 if v else 0 for v in r] for r in self.rows])

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "MultiplicityMatrix":
        if set(obj) != {"rows"}:
            raise ValueError(f"bad multiplicity matrix literal {obj!r}")
        return cls(obj["rows"])

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


@dataclass(frozen=True)
class SignedDopeMatrix:
    rows: tuple

    def __init__(self, rows):
        object.__setattr__(self, "rows", _parse_rows(rows, {-1, 0, 1}))

    def support_zeros(self) -> DopeMatrix:
        return DopeMatrix([[1 if v == 0 else 0 for v in r] for r in self.rows])

    def __str__(self):
        sym = {-1: "-", 0: "0", 1: "+"}
        return "\n".join("".join(sym[v] for v in r) for r in self.rows)


# ---------------------------------------------------------------------------
# computing matrices from polynomials


def _taylor_rows(p: Poly, nodes: NodeTuple):
    if p.is_zero:
        raise ValueError("the zero polynomial has no dope matrix")
    field = nodes.field if nodes.field != QQ else p.field
    q = Poly(p.coeffs, field)
    return [q.taylor_coefficients(lam) for lam in nodes]


def dope_matrix_of(p: Poly, nodes: NodeTuple) -> DopeMatrix:
    """Zero pattern of ``P^(j)(lam_i)``; read off Taylor expansions at each node."""
    return DopeMatrix([[0 if c else 1 for c in row] for row in _taylor_rows(p, nodes)])


def signed_dope_matrix_of(p: Poly, nodes: NodeTuple) -> SignedDopeMatrix:
    # Taylor coefficients are P^(j)(lam)/j!, which has the same sign
    rows = _taylor_rows(p, nodes)
    field = nodes.field if nodes.field != QQ else p.field
    return SignedDopeMatrix([[field.sign(c) for c in row] for row in rows])


def multiplicity_from_dope(D: DopeMatrix) -> MultiplicityMatrix:
    """Run lengths of 1s starting at each entry."""
    out = []
    for r in D.rows:
        mu = [0] * len(r)
        run = 0
        for j in range(len(r) - 1, -1, -1):
            run = run + 1 if r[j] else 0
            mu[j] = run
        out.append(mu)
    return MultiplicityMatrix(out)


def multiplicity_matrix_of(p: Poly, nodes: NodeTuple) -> MultiplicityMatrix:
    return multiplicity_from_dope(dope_matrix_of(p, nodes))


# ---------------------------------------------------------------------------
# conditions


def condition_T(D) -> bool:
    """At most ``k`` nonzero entries in the last ``k+1`` columns, for every ``k``."""
    rows = D.rows
    if not rows:
        return True
    n = len(rows[0]) - 1
    total = 0
    for k in range(n + 1):
        total += sum(1 for r in rows if r[n - k])
        if total > k:
            return False
    return True


def tail_violation(D):
    """Smallest ``k`` at which the tail condition fails, or ``None``."""
    n = D.n
    total = 0
    for k in range(n + 1):
        total += sum(1 for r in D.rows if r[n - k])
        if total > k:
            return k
    return None


def check_conditions(M) -> dict:
    """Evaluate conditions E, R, C and T on a multiplicity matrix.

    A :class:`DopeMatrix` is first converted with :func:`multiplicity_from_dope`.
    """
    if isinstance(M, DopeMatrix):
        M = multiplicity_from_dope(M)
    rows = M.rows
    n = M.n
    cond_e = all(isinstance(v, int) and v >= 0 for r in rows for v in r)
    cond_r = True
    for r in rows:
        for j, v in enumerate(r):
            if v > 0 and (j >= n or r[j + 1] != v - 1):
                cond_r = False
    cond_c = all(sum(r[j] for r in rows) <= n - j for j in range(n + 1))
    cond_t = condition_T(M.support()) if rows else True
    return {"E": cond_e, "R": cond_r, "C": cond_c, "T": cond_t}


def is_dope_two_row(D: DopeMatrix) -> bool:
    if D.m != 2:
        raise ValueError("the tail criterion characterises two-row matrices only")
    return condition_T(D)


# ---------------------------------------------------------------------------
# witnesses


def _move_nodes(p: Poly, nodes: NodeTuple) -> Poly:
    """Transport a polynomial realising ``D`` at (0, 1) to ``nodes``: ``P((x - l0)/(l1 - l0))``."""
    field = nodes.field
    q = Poly(p.coeffs, field).scale_argument(1 / (nodes[1] - nodes[0]))
    return q.taylor_shift(-nodes[0])


def witness_two_row(D: DopeMatrix, nodes: NodeTuple | None = None) -> Poly:
    """Degree-``n`` polynomial whose dope matrix at ``nodes`` is ``D``.

    Pad ``D`` on the left with ``h`` all-ones columns so it has exactly
    ``n + h`` ones, solve for the unique monic degree ``n + h`` polynomial
    vanishing at those positions for nodes (0, 1), differentiate ``h`` times,
    and move the nodes affinely.
    """
    if not is_dope_two_row(D):
        raise NotDopeError(f"tail condition fails at k={tail_violation(D)}")
    if nodes is None:
        nodes = NodeTuple([0, 1])
    if len(nodes) != 2:
        raise ValueError("two nodes required")
    n = D.n
    h = n - D.count()
    N = n + h
    padded = DopeMatrix([[1] * h + list(r) for r in D.rows])
    base = build_forms(NodeTuple([0, 1]), N)
    rows = [base[i][j] for i, j in sorted(padded.ones())]
    if rows:
        kernel = nullspace(ExactMatrix(rows, QQ, N + 1))
    else:
        kernel = [top_vector(N)]
    if len(kernel) != 1 or not kernel[0][N]:
        raise AssertionError("padded system should have a one-dimensional monic solution")
    lead = kernel[0][N]
    big = Poly([c / lead for c in kernel[0]], QQ)
    return _move_nodes(big.derivative(h), nodes)


class NotRealizable:
    """Returned by :func:`witness_general` when no polynomial exists."""

    def __init__(self, reason: str):
        self.reason = reason

    def __bool__(self):
        return False

    def __repr__(self):
        return f"NotRealizable({self.reason!r})"


def _compositions(r: int, bound: int):
    """Integer vectors in ``[0, bound]^r`` ordered by coordinate sum, then lexicographically."""
    if r == 0:
        yield ()
        return
    for total in range(r * bound + 1):
        yield from _with_sum(r, total, bound)


def _with_sum(r, total, bound):
    if r == 1:
        if total <= bound:
            yield (total,)
        return
    for first in range(min(total, bound) + 1):
        for rest in _with_sum(r - 1, total - first, bound):
            yield (first,) + rest


def witness_general(E, nodes: NodeTuple, n: int):
    """A degree-``n`` polynomial whose 1-positions at ``nodes`` are exactly ``E``.

    ``E`` is realisable iff it is closed and its span avoids ``(0, ..., 0, 1)``.
    A point of the solution space avoiding every off-``E`` hyperplane is found
    by scanning small integer combinations of a kernel basis; a grid with
    ``m*n + 2`` values per axis always contains one.
    """
    field = nodes.field
    m = len(nodes)
    E = frozenset(E)
    forms = build_forms(nodes, n)
    if any(j == n for _, j in E) or top_vector(n, field) in span_of(E, forms, field):
        return NotRealizable("span contains the leading-coefficient functional")
    if closure(E, forms, field) != E:
        return NotRealizable("positions set is not closed")
    if E:
        basis = nullspace(ExactMatrix([forms[i][j] for i, j in sorted(E)], field, n + 1))
    else:
        basis = [tuple(field.one if k == j else field.zero for k in range(n + 1)) for j in range(n + 1)]
    avoid = [forms[i][j] for i in range(m) for j in range(n) if (i, j) not in E]
    avoid.append(top_vector(n, field))
    # precompute each avoided functional on each basis vector
    table = [[evaluate_form(f, b) for b in basis] for f in avoid]
    zero = field.zero
    for c in _compositions(len(basis), m * n + 1):
        if all(sum((ci * v for ci, v in zip(c, row) if ci and v), zero) for row in table):
            coeffs = [sum((ci * b[k] for ci, b in zip(c, basis) if ci), zero) for k in range(n + 1)]
            return Poly(coeffs, field)
    raise AssertionError("grid search exhausted; kernel basis is inconsistent")


# ---------------------------------------------------------------------------
# extension problem


@dataclass
class ExtensionPlan:
    """Row data for the CRT extension: zero sets ``A_i`` and residues ``P_i``."""

    nodes: NodeTuple
    n: int
    zero_sets: list = dc_field(default_factory=list)
    residues: list = dc_field(default_factory=list)


def extension_plan(D: DopeMatrix, nodes: NodeTuple) -> ExtensionPlan:
    if D.m != len(nodes):
        raise ValueError("matrix rows and node count differ")
    field = nodes.field
    plan = ExtensionPlan(nodes, D.n)
    for lam, row in zip(nodes, D.rows):
        A = [j for j, v in enumerate(row) if not v]
        P = Poly((), field)
        for j in A:
            P = P + Poly.linear_power(lam, j, field)
        plan.zero_sets.append(A)
        plan.residues.append(P)
    return plan


def extend(D: DopeMatrix, nodes: NodeTuple) -> Poly:
    """Polynomial with ``n <= deg <= m(n+2)`` whose dope matrix starts with ``D``.

    Coefficients stay in the field of the nodes.
    """
    plan = extension_plan(D, nodes)
    n = D.n
    field = nodes.field
    P = crt_interpolate([(lam, n + 2, R) for lam, R in zip(nodes, plan.residues)], field)
    if P.degree < n:
        bump = Poly([1], field)
        for lam in nodes:
            bump = bump * Poly.linear_power(lam, n + 2, field)
        P = P + bump
    return P


# ---------------------------------------------------------------------------
# classical checks


def polya_poised(E: DopeMatrix) -> bool:
    """At least ``k`` ones among the first ``k`` columns, for ``k = 1..n+1``."""
    if E.m != 2:
        raise ValueError("Polya condition is stated for two rows")
    total = 0
    for k in range(1, E.n + 2):
        total += E.rows[0][k - 1] + E.rows[1][k - 1]
        if total < k:
            return False
    return True


def interpolation_kernel(E: DopeMatrix, nodes: NodeTuple | None = None) -> list:
    """Polynomials of degree <= n with ``P^(j)(lam_i) = 0`` wherever ``E`` has a 1."""
    if nodes is None:
        nodes = NodeTuple(range(E.m))
    n = E.n
    forms = build_forms(nodes, n)
    rows = [forms[i][j] for i, j in sorted(E.ones())]
    if not rows:
        return [tuple(1 if k == j else 0 for k in range(n + 1)) for j in range(n + 1)]
    return nullspace(ExactMatrix(rows, nodes.field, n + 1))


def is_poised(E: DopeMatrix, nodes: NodeTuple | None = None) -> bool:
    """Only the zero polynomial of degree <= n meets the homogeneous conditions."""
    return not interpolation_kernel(E, nodes)


def gv_nonsingular(G, H) -> dict:
    """Interval condition and determinant of ``(binom(g, h))`` for sets ``G``, ``H``."""
    G, H = sorted(set(G)), sorted(set(H))
    if len(G) != len(H):
        raise ValueError("G and H must have the same size")
    top = max(G + H, default=-1)
    holds = all(sum(1 for g in G if g <= c) <= sum(1 for h in H if h <= c) for c in range(top + 1))
    value = det(ExactMatrix([[comb(g, h) for h in H] for g in G], QQ, len(H)))
    return {"condition_holds": holds, "det_nonzero": value != 0, "det": value}


def all_matrices(m: int, n: int):
    """Every ``m x (n+1)`` 0/1 matrix."""
    width = n + 1
    for bits in itertools.product((0, 1), repeat=m * width):
        yield DopeMatrix([bits[i * width:(i + 1) * width] for i in range(m)])


def condition_T_matrices(m: int, n: int) -> list[DopeMatrix]:
    """All matrices satisfying the tail condition, sorted by bitstring."""
    cols = list(itertools.product((0, 1), repeat=m))
    out = []

    def grow(k, suffix, used):
        # suffix holds columns n-k+1 .. n
        if k == n + 1:
            out.append(DopeMatrix([[c[i] for c in suffix] for i in range(m)]))
            return
        for c in cols:
            s = used + sum(c)
            if s <= k:
                grow(k + 1, [c] + suffix, s)

    grow(0, [], 0)
    out.sort(key=DopeMatrix.bitstring)
    return out


def degree_lower_bound_all_ones(m: int, n: int) -> int:
    """Any extension of the all-ones ``m x (n+1)`` matrix has at least this degree."""
    return m * (n + 1)


__all__ = [
    "DopeMatrix", "MultiplicityMatrix", "SignedDopeMatrix", "ExtensionPlan", "NotRealizable",
    "NotDopeError", "dope_matrix_of", "signed_dope_matrix_of", "multiplicity_from_dope",
    "multiplicity_matrix_of", "check_conditions", "condition_T", "tail_violation",
    "is_dope_two_row", "witness_two_row", "witness_general", "extension_plan", "extend",
    "polya_poised", "is_poised", "interpolation_kernel", "gv_nonsingular",
    "all_matrices", "condition_T_matrices", "degree_lower_bound_all_ones",
]

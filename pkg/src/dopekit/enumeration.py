"""Enumerating the dope matrices of a node tuple.

A set of positions ``E`` is the 1-set of a degree-``n`` dope matrix exactly
when it is closed under span membership of the attached linear forms and its
span avoids ``v0 = (0, ..., 0, 1)``.  So the dope matrices are the flats of
the form matroid that miss the last column, and we walk that lattice upward
from the empty flat.

Each flat carries the residue of every outside form modulo its span, kept as
a primitive ring vector.  Outside forms with equal residues generate the same
cover, so the covers of a flat come from a single grouping pass; the residues
of a new flat need one elimination step per outside form.
"""

from __future__ import annotations

import itertools
import os
from collections import defaultdict

from .dope import DopeMatrix, condition_T_matrices
from .forms import NodeTuple, build_forms, closure, top_vector
from .linalg import SpanBasis
from .scalars import QQ, GenericField

DEFAULT_FLAT_CAP = 10**7


class FlatCapExceeded(RuntimeError):
    pass


def flat_cap() -> int:
    return int(os.environ.get("DOPEKIT_FLAT_CAP", DEFAULT_FLAT_CAP))


def flat_lattice(vectors, field, dim, stop=(), cap=None):
    """Bitmasks of all flats of the vector matroid on ``vectors``.

    Flats containing any element of ``stop`` are discarded together with
    everything above them.  Returns ``(mask, rank)`` pairs in discovery order.
    """
    cap = flat_cap() if cap is None else cap
    stop_mask = 0
    for e in stop:
        stop_mask |= 1 << e
    prim = field.primitive
    keyf = field.key
    residues = {e: prim(field.ring_row(v)) for e, v in enumerate(vectors)}
    loops = 0
    for e, r in list(residues.items()):
        if not any(r):
            loops |= 1 << e
            del residues[e]
    if loops & stop_mask:
        return []
    found = [(loops, 0)]
    seen = {loops}
    frontier = [(loops, residues)]
    rank = 0
    while frontier:
        rank += 1
        # a flat of rank dim - 1 only has the full space above it
        expand = rank < dim and not (stop_mask and rank >= dim - 1)
        nxt = []
        for mask, res in frontier:
            groups = {}
            for e, r in res.items():
                k = keyf(r)
                if k in groups:
                    groups[k][1].append(e)
                else:
                    groups[k] = (r, [e])
            for key, members in groups.values():
                child = mask
                for e in members:
                    child |= 1 << e
                if child & stop_mask or child in seen:
                    continue
                seen.add(child)
                found.append((child, rank))
                if len(found) > cap:
                    raise FlatCapExceeded(f"more than {cap} flats")
                if not expand:
                    continue
                c = next(k for k, x in enumerate(key) if x)
                p = key[c]
                child_res = {}
                for e, r in res.items():
                    if child >> e & 1:
                        continue
                    x = r[c]
                    if x:
                        r = prim([p * ri - x * ki for ri, ki in zip(r, key)])
                    child_res[e] = r
                nxt.append((child, child_res))
        frontier = nxt
    return found


def _position_vectors(nodes: NodeTuple, n: int):
    """Forms for columns ``< n`` in row-major order plus one shared top vector."""
    forms = build_forms(nodes, n)
    elems = [(i, j) for i in range(len(nodes)) for j in range(n)]
    vectors = [forms[i][j] for i, j in elems]
    vectors.append(top_vector(n, nodes.field))
    return elems, vectors


def enumerate_flats(nodes: NodeTuple, n: int, cap=None) -> list[frozenset]:
    """1-position sets of every dope matrix in degree ``n`` (unsorted)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    elems, vectors = _position_vectors(nodes, n)
    top = len(elems)
    out = []
    for mask, _ in flat_lattice(vectors, nodes.field, n + 1, stop=[top], cap=cap):
        out.append(frozenset(elems[e] for e in range(top) if mask >> e & 1))
    return out


def _to_sorted_matrices(sets, m, n):
    mats = [DopeMatrix.from_positions(E, m, n) for E in sets]
    mats.sort(key=DopeMatrix.bitstring)
    return mats


def enumerate_dope(nodes: NodeTuple, n: int, cap=None) -> list[DopeMatrix]:
    """All ``m x (n+1)`` dope matrices for ``nodes``, sorted by row-major bitstring."""
    return _to_sorted_matrices(enumerate_flats(nodes, n, cap), len(nodes), n)


def count_dope(nodes: NodeTuple, n: int, cap=None) -> int:
    elems, vectors = _position_vectors(nodes, n)
    return len(flat_lattice(vectors, nodes.field, n + 1, stop=[len(elems)], cap=cap))


def generic_nodes(m: int) -> NodeTuple:
    """``(0, 1, t1, ..., t_{m-2})``; one or two nodes are always generic."""
    if m < 1:
        raise ValueError("need at least one node")
    if m <= 2:
        return NodeTuple(range(m), QQ)
    field = GenericField(m - 2)
    return NodeTuple([field.zero, field.one, *field.gens], field)


def enumerate_generic(m: int, n: int, cap=None) -> list[DopeMatrix]:
    return enumerate_dope(generic_nodes(m), n, cap)


def brute_force_dope(nodes: NodeTuple, n: int, limit: int = 16) -> list[DopeMatrix]:
    """Reference enumeration over every subset of the first ``n`` columns.

    Keeps ``E`` when it is closed and its span misses the top vector.  Uses a
    fresh span basis per subset; meant as a test oracle only.
    """
    m = len(nodes)
    if m * n > limit:
        raise ValueError(f"m*n = {m * n} exceeds the brute-force limit {limit}")
    field = nodes.field
    forms = build_forms(nodes, n)
    cells = [(i, j) for i in range(m) for j in range(n)]
    v0 = top_vector(n, field)
    out = []
    for bits in itertools.product((0, 1), repeat=len(cells)):
        E = frozenset(c for c, b in zip(cells, bits) if b)
        basis = SpanBasis(field, n + 1, [forms[i][j] for i, j in sorted(E)])
        if v0 in basis:
            continue
        if all(forms[i][j] not in basis for i, j in cells if (i, j) not in E):
            out.append(E)
    return _to_sorted_matrices(out, m, n)


def count_condition_T(m: int, n: int) -> int:
    """Number of ``m x (n+1)`` 0/1 matrices with at most ``k`` ones in the last ``k+1`` columns.

    Dynamic programme over columns from the right, tracking the ones used.
    """
    from math import comb

    ways = {0: 1}
    for k in range(n + 1):
        nxt = defaultdict(int)
        for used, w in ways.items():
            for c in range(m + 1):
                if used + c <= k:
                    nxt[used + c] += w * comb(m, c)
        ways = nxt
    return sum(ways.values())


def check_conjecture_8_1(m: int, n_max: int, cap=None) -> list[dict]:
    """Compare the generic dope set with the tail-condition set for ``n <= n_max``."""
    report = []
    for n in range(n_max + 1):
        gen = set(enumerate_generic(m, n, cap))
        tail = set(condition_T_matrices(m, n))
        extra = sorted(gen - tail, key=DopeMatrix.bitstring)
        missing = sorted(tail - gen, key=DopeMatrix.bitstring)
        report.append({
            "n": n,
            "generic": len(gen),
            "condition_T": len(tail),
            "equal": not extra and not missing,
            "counterexample": (extra or missing or [None])[0],
        })
    return report


def compare_to_generic(nodes: NodeTuple, n: int, cap=None) -> dict:
    own = set(enumerate_dope(nodes, n, cap))
    gen = set(enumerate_generic(len(nodes), n, cap))
    return {
        "size": len(own),
        "generic_size": len(gen),
        "subset": own <= gen,
        "equal": own == gen,
    }


def compare_tuples(a: NodeTuple, b: NodeTuple, n_max: int, cap=None) -> list[dict]:
    """Per-degree set comparison of two tuples (probe for the equivalence of triples)."""
    out = []
    for n in range(n_max + 1):
        A, B = set(enumerate_dope(a, n, cap)), set(enumerate_dope(b, n, cap))
        out.append({"n": n, "left": len(A), "right": len(B), "equal": A == B})
    return out


def table_counts(tuples, n_max: int, cap=None) -> list[list[int]]:
    return [[count_dope(t, n, cap) for n in range(n_max + 1)] for t in tuples]


def is_realizable(E, nodes: NodeTuple, n: int) -> bool:
    """Closed and avoiding the top vector, by direct span computation."""
    forms = build_forms(nodes, n)
    E = frozenset(E)
    if any(j == n for _, j in E):
        return False
    if top_vector(n, nodes.field) in SpanBasis(nodes.field, n + 1, [forms[i][j] for i, j in sorted(E)]):
        return False
    return closure(E, forms, nodes.field) == E

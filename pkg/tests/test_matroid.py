import itertools
import random

import pytest

from dopekit.enumeration import count_dope, enumerate_dope, generic_nodes
from dopekit.forms import NodeTuple
from dopekit.matroid import MatroidView
from dopekit.scalars import QuadraticField

Q2 = QuadraticField(2)


def subsets(xs):
    return itertools.chain.from_iterable(itertools.combinations(xs, k) for k in range(len(xs) + 1))


def test_independence_examples():
    M = MatroidView(NodeTuple([0, 1]), 1)
    assert M.is_independent(set())
    assert not M.is_independent({(0, 1), (1, 1)})
    assert M.is_independent({(0, 0), (1, 0)})
    with pytest.raises(ValueError):
        M.rank({(5, 0)})


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 1), (2, 2), (2, 3)])
def test_rank_axioms_exhaustive(m, n):
    M = MatroidView(NodeTuple(range(m)), n)
    ground = M.ground
    all_sets = [frozenset(s) for s in subsets(ground)]
    assert M.rank(set()) == 0
    for S in all_sets:
        r = M.rank(S)
        for e in ground:
            assert r <= M.rank(S | {e}) <= r + 1
    rng = random.Random(11)
    for _ in range(300):
        A, B = rng.choice(all_sets), rng.choice(all_sets)
        assert M.rank(A | B) + M.rank(A & B) <= M.rank(A) + M.rank(B)


def test_rank_axioms_random_three_rows():
    M = MatroidView(NodeTuple([0, 1, Q2.sqrt], Q2), 4)
    rng = random.Random(5)
    for _ in range(150):
        A = frozenset(p for p in M.ground if rng.random() < 0.3)
        B = frozenset(p for p in M.ground if rng.random() < 0.3)
        assert M.rank(A | B) + M.rank(A & B) <= M.rank(A) + M.rank(B)
        assert M.rank(A) <= len(A)


@pytest.mark.parametrize("nodes", [NodeTuple([0]), NodeTuple([0, 1]), NodeTuple([0, 1, 2]), NodeTuple([0, 1, Q2.sqrt], Q2), generic_nodes(3)], ids=str)
def test_flats(nodes):
    for n in range(4):
        M = MatroidView(nodes, n)
        flats = M.all_flats()
        assert frozenset(M.ground) in flats
        assert all(M.is_flat(F) for F in flats)
        avoiding = [F for F in flats if all(j < n for _, j in F)]
        assert len(avoiding) == count_dope(nodes, n)
        assert {frozenset(D.ones()) for D in enumerate_dope(nodes, n)} == set(avoiding)


def test_flats_exhaustive_small():
    M = MatroidView(NodeTuple([0, 1]), 2)
    closed = {frozenset(S) for S in subsets(M.ground) if M.is_flat(S)}
    assert closed == set(M.all_flats())


def test_single_row_flats():
    for n in range(4):
        M = MatroidView(NodeTuple([0]), n)
        assert len(M.all_flats()) == 2 ** (n + 1)
        assert len(M.dope_flats()) == 2 ** n


def test_contraction():
    for nodes, n in [(NodeTuple([0, 1]), 1), (NodeTuple([0, 1, 2]), 2), (NodeTuple([0, 1]), 3)]:
        M = MatroidView(nodes, n)
        top = (0, n)
        with_top = sorted((F - {top} for F in M.all_flats() if top in F), key=lambda S: (len(S), sorted(S)))
        assert M.all_flats(contract_top=True) == with_top
    # the contraction is not in bijection with the dope matrices
    M = MatroidView(NodeTuple([0, 1]), 1)
    assert len(M.all_flats(contract_top=True)) == 2
    assert count_dope(NodeTuple([0, 1]), 1) == 3

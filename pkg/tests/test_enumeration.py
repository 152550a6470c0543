from math import comb

import pytest

from dopekit.dope import DopeMatrix, condition_T_matrices, dope_matrix_of, witness_general
from dopekit.enumeration import (
    FlatCapExceeded,
    brute_force_dope,
    check_conjecture_8_1,
    compare_to_generic,
    compare_tuples,
    count_condition_T,
    count_dope,
    enumerate_dope,
    enumerate_generic,
    flat_lattice,
    generic_nodes,
    is_realizable,
)
from dopekit.forms import NodeTuple
from dopekit.linalg import in_span
from dopekit.forms import build_forms, top_vector
from dopekit.scalars import QuadraticField

from modp_oracle import count_flats_mod_p, sqrt_mod

Q2 = QuadraticField(2)
SQRT2 = NodeTuple([0, 1, Q2.sqrt], Q2)
PRIMES = (1000000007, 2147483647, 1000000009)


def test_spec_examples():
    for n in range(4):
        assert len(enumerate_dope(NodeTuple([7]), n)) == 2 ** n
    assert len(enumerate_dope(NodeTuple([0, 1, 2]), 2)) == 17
    assert len(enumerate_dope(SQRT2, 3)) == 98
    assert len(enumerate_generic(3, 4)) == 531
    assert enumerate_generic(2, 3) == condition_T_matrices(2, 3)
    assert len(enumerate_generic(2, 3)) == comb(7, 3)
    assert enumerate_generic(1, 0) == [DopeMatrix(["0"])]


def test_sorted_and_unique():
    mats = enumerate_dope(NodeTuple([0, 1, 3]), 3)
    bits = [D.bitstring() for D in mats]
    assert bits == sorted(bits) and len(set(bits)) == len(bits)


@pytest.mark.parametrize("nodes", [NodeTuple([0, 1, 2]), SQRT2, generic_nodes(3)], ids=["2", "sqrt2", "t1"])
def test_brute_force_agrees(nodes):
    for n in range(4):
        assert enumerate_dope(nodes, n) == brute_force_dope(nodes, n)


def test_brute_force_single_row():
    assert len(brute_force_dope(NodeTuple([3]), 4)) == 16
    with pytest.raises(ValueError):
        brute_force_dope(NodeTuple([0, 1, 2]), 6)


def test_every_flat_is_realised():
    nodes = NodeTuple([0, 1, 2])
    forms = build_forms(nodes, 3)
    for D in enumerate_dope(nodes, 3):
        assert not in_span(top_vector(3), [forms[i][j] for i, j in D.ones()])
        P = witness_general(D.ones(), nodes, 3)
        assert dope_matrix_of(P, nodes) == D


def test_realizable_agrees_with_enumeration():
    nodes = NodeTuple([0, 1, 4])
    found = set(enumerate_dope(nodes, 2))
    import itertools
    for bits in itertools.product((0, 1), repeat=6):
        D = DopeMatrix([bits[0:3], bits[3:6]] + [[0, 0, 0]])
        E = D.ones()
        assert is_realizable(E, nodes, 2) == (D in found)


def test_condition_T_count():
    for m in range(1, 4):
        for n in range(5):
            assert count_condition_T(m, n) == len(condition_T_matrices(m, n))
    assert count_condition_T(2, 5) == comb(11, 5)
    assert count_condition_T(3, 6) == 17060
    assert all(count_condition_T(m, 0) == 1 for m in range(1, 5))


def test_conjecture_checker_small():
    for row in check_conjecture_8_1(3, 4):
        assert row["equal"] and row["counterexample"] is None
    assert all(r["equal"] for r in check_conjecture_8_1(2, 5))


def test_generic_three_row_counts():
    assert [count_dope(generic_nodes(3), n) for n in range(6)] == [1, 4, 19, 98, 531, 2974]


def test_compare_to_generic():
    r = compare_to_generic(NodeTuple([0, 1, 2]), 4)
    assert (r["size"], r["generic_size"], r["equal"]) == (446, 531, False)
    r = compare_to_generic(NodeTuple([0, 1, 4]), 3)
    assert r["size"] == r["generic_size"] == 98 and r["equal"]
    assert compare_to_generic(generic_nodes(3), 3)["equal"]


def test_compare_tuples():
    rows = compare_tuples(NodeTuple([0, 1, 2]), NodeTuple([1, 3, 5]), 3)
    assert all(r["equal"] for r in rows)
    assert not compare_tuples(NodeTuple([0, 1, 2]), NodeTuple([0, 1, 3]), 3)[3]["equal"]


def test_cap():
    with pytest.raises(FlatCapExceeded):
        count_dope(generic_nodes(3), 3, cap=10)


def test_cap_env(monkeypatch):
    monkeypatch.setenv("DOPEKIT_FLAT_CAP", "5")
    with pytest.raises(FlatCapExceeded):
        count_dope(NodeTuple([0, 1]), 3)


def test_flat_lattice_loops_and_parallels():
    from dopekit.scalars import QQ
    vecs = [(0, 0), (1, 0), (2, 0), (0, 1)]
    flats = {mask for mask, _ in flat_lattice(vecs, QQ, 2)}
    assert flats == {0b0001, 0b0111, 0b1001, 0b1111}


@pytest.mark.parametrize("lam,n,expected", [
    ("3", 5, 2792), ("4", 5, 2908), ("sqrt2", 4, 523), ("sqrt2", 5, 2940),
])
def test_counts_against_prime_field_oracle(lam, n, expected):
    nodes = {"3": NodeTuple([0, 1, 3]), "4": NodeTuple([0, 1, 4]), "sqrt2": SQRT2}[lam]
    assert count_dope(nodes, n) == expected
    for p in PRIMES:
        third = 3 if lam == "3" else 4 if lam == "4" else sqrt_mod(2, p)
        if third is None:
            continue
        assert count_flats_mod_p([0, 1, third], n, p) == expected

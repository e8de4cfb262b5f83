import pytest

from polychrome import gf2

from .oracles import circuits_bruteforce, rank_by_span

E1, E2, E3, E4 = 1, 2, 4, 8


def test_rank_standard_basis():
    assert gf2.rank([E1, E2, E3, E4], 4) == 4


def test_rank_dependent_triple():
    assert gf2.rank([E1, E2, E1 ^ E2], 4) == 2


def test_rank_four_vectors_summing_to_zero():
    # e4, e1+e4, e1+e2+e4, e2+e4: any three independent, all four not
    assert gf2.rank([8, 9, 11, 10], 4) == 3


def test_rank_empty():
    assert gf2.rank([], 4) == 0


def test_rank_matches_span_oracle_on_small_enumeration():
    for vecs in [[1, 2, 3], [5, 9, 12, 6], [7, 7], [15, 1], [3, 5, 6], [8, 9, 11, 10]]:
        assert gf2.rank(vecs, 4) == rank_by_span(vecs)


def test_rank_rejects_overwide_vectors():
    with pytest.raises(ValueError):
        gf2.rank([16], 4)
    with pytest.raises(ValueError):
        gf2.rank([1], 0)
    with pytest.raises(ValueError):
        gf2.rank([1], 17)


def test_is_independent():
    assert not gf2.is_independent([E1, E2, E3, E1 ^ E2 ^ E3], 4)
    assert gf2.is_independent([E1], 4)
    assert gf2.is_independent([E1, E2, E3 ^ E4, E1 ^ E2 ^ E3], 4)


def test_in_span():
    assert gf2.in_span(E1 ^ E2, [E1, E2], 4)
    assert not gf2.in_span(E4, [E1, E2, E3, E1 ^ E2 ^ E3], 4)
    assert gf2.in_span(E3 ^ E4, [E3, E4], 4)
    assert not gf2.in_span(1, [], 4)


def test_parity():
    assert gf2.parity(E1 ^ E2 ^ E3) == 1
    assert gf2.parity(E1 ^ E2) == 0
    assert gf2.parity(15) == 0
    assert gf2.parity(0) == 0


def test_circuits_unique_triple():
    assert gf2.circuits([E1, E2, E1 ^ E2, E3], 4) == [(0, 1, 2)]


def test_circuits_basis_has_none():
    assert gf2.circuits([E1, E2, E3, E4], 4) == []


def test_circuits_full_four_cycle():
    assert gf2.circuits([8, 9, 11, 10], 4) == [(0, 1, 2, 3)]


def test_circuits_rejects_zero_vector():
    with pytest.raises(ValueError, match="zero vector"):
        gf2.circuits([1, 0, 2], 4)


def test_circuits_multiple_and_sorted():
    # 1^2^3 = 0, 1^4^5 = 0, and their symmetric difference; lexicographic output
    vecs = [1, 2, 3, 4, 5]
    result = gf2.circuits(vecs, 4)
    assert result == [(0, 1, 2), (0, 3, 4), (1, 2, 3, 4)]
    assert result == circuits_bruteforce(vecs)


def test_circuits_pair_of_equal_vectors():
    assert gf2.circuits([3, 3, 4], 4) == [(0, 1)]


def test_vector_str():
    assert gf2.vector_str(5) == "e1+e3"
    assert gf2.vector_str(1) == "e1"
    assert gf2.vector_str(0) == "0"

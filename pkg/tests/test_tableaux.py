import math

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_force_kostka, hook_length_dimension
from relsym.partitions import dominates, enumerate_partitions, multiplicity_factorial
from relsym.tableaux import Tableau, count_fillings, enumerate_ssyt, kostka


def test_kostka_diagonal_is_one():
    for m in range(1, 8):
        for mu in enumerate_partitions(m):
            assert kostka(mu, mu) == 1


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3, 2), (2, 2, 1)) == 2


def test_kostka_rejects_weight_mismatch():
    with pytest.raises(ValueError):
        kostka((2, 1), (2, 2))


@pytest.mark.parametrize("m", range(1, 7))
def test_kostka_matches_brute_force(m):
    for mu in enumerate_partitions(m):
        for pi in enumerate_partitions(m):
            assert kostka(mu, pi) == brute_force_kostka(mu, pi)


@pytest.mark.parametrize("m", range(1, 8))
def test_kostka_positive_iff_dominates(m):
    for mu in enumerate_partitions(m):
        for pi in enumerate_partitions(m):
            assert (kostka(mu, pi) > 0) == dominates(mu, pi)


def test_enumerate_ssyt_examples():
    only = enumerate_ssyt((2,), (1, 1))
    assert [t.rows for t in only] == [((1, 2),)]
    assert enumerate_ssyt((1, 1), (2, 0)) == []
    two = enumerate_ssyt((2, 1), (1, 1, 1))
    assert len(two) == 2


def test_enumerate_ssyt_output_is_valid_and_sorted():
    for mu in enumerate_partitions(5):
        for pi in enumerate_partitions(5):
            tableaux = enumerate_ssyt(mu, pi)
            assert len(tableaux) == kostka(mu, pi)
            words = [t.reading_word() for t in tableaux]
            assert words == sorted(words)
            assert len(set(words)) == len(words)
            for t in tableaux:
                assert t.shape == mu
                assert t.is_semistandard()
                assert t.content() == pi


@st.composite
def shape_and_content(draw):
    m = draw(st.integers(min_value=1, max_value=6))
    shapes = enumerate_partitions(m)
    mu = shapes[draw(st.integers(min_value=0, max_value=len(shapes) - 1))]
    pis = enumerate_partitions(m)
    pi = pis[draw(st.integers(min_value=0, max_value=len(pis) - 1))]
    padded = list(pi) + [0] * (m - len(pi))
    shuffled = draw(st.permutations(padded))
    return mu, pi, tuple(shuffled)


@settings(max_examples=60, deadline=None)
@given(shape_and_content())
def test_content_permutation_invariance(data):
    mu, pi, shuffled = data
    assert count_fillings(mu, shuffled) == kostka(mu, pi)
    assert len(enumerate_ssyt(mu, shuffled)) == kostka(mu, pi)


@pytest.mark.parametrize("m", range(1, 7))
def test_kostka_column_weighted_by_degrees(m):
    # the permutation module on cosets of a Young subgroup has dimension
    # equal to the index; its irreducible pieces are counted by Kostka
    for pi in enumerate_partitions(m):
        total = sum(
            kostka(mu, pi) * hook_length_dimension(mu) for mu in enumerate_partitions(m)
        )
        assert total == math.factorial(m) // multiplicity_factorial(pi)


def test_tableau_entry_access():
    t = enumerate_ssyt((2, 1), (2, 1))[0]
    assert t.entry(1, 1) == 1
    assert t.entry(1, 2) == 1
    assert t.entry(2, 1) == 2

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_force_denumerant
from relsym.characters import character_table, trivial_character
from relsym.denumerant import (
    class_function_from_decomposition,
    denumerant,
    denumerant_by_induced_characters,
    denumerant_class_function,
    denumerant_decomposition,
    denumerant_series,
    verify_trace_identity,
)
from relsym.errors import ResourceLimitError
from relsym.partitions import enumerate_partitions, gamma_size


def test_denumerant_examples():
    assert denumerant((1, 1), 5) == 6
    assert denumerant((1, 2), 4) == 3
    assert denumerant((3, 2, 1), 5) == 5
    assert denumerant((2, 4), 3) == 0
    assert denumerant((7,), 0) == 1


def test_denumerant_rejects_bad_input():
    with pytest.raises(ValueError):
        denumerant((), 3)
    with pytest.raises(ValueError):
        denumerant((1, 0), 3)
    with pytest.raises(ValueError):
        denumerant((1, 2), -1)


coin_systems = st.lists(st.integers(min_value=1, max_value=10), min_size=1, max_size=6)


@settings(max_examples=80, deadline=None)
@given(coin_systems, st.integers(min_value=0, max_value=40))
def test_denumerant_matches_brute_force(coins, d):
    assert denumerant(coins, d) == brute_force_denumerant(coins, d)


@settings(max_examples=40, deadline=None)
@given(coin_systems, st.permutations(range(6)))
def test_denumerant_coin_order_irrelevant(coins, order):
    shuffled = [coins[i % len(coins)] for i in order[: len(coins)]]
    reordered = sorted(coins)
    assert denumerant(coins, 17) == denumerant(reordered, 17)
    assert denumerant(sorted(coins, reverse=True), 17) == denumerant(coins, 17)


def test_series_examples():
    assert denumerant_series((1,), 4) == [1, 1, 1, 1, 1]
    assert denumerant_series((1, 2), 5) == [1, 1, 2, 2, 3, 3]
    assert denumerant_series((2, 3), 6) == [1, 0, 1, 1, 1, 1, 2]


@settings(max_examples=30, deadline=None)
@given(coin_systems, st.integers(min_value=0, max_value=200))
def test_series_agrees_with_single_counts(coins, d_max):
    series = denumerant_series(coins, d_max)
    assert len(series) == d_max + 1
    for d in range(0, d_max + 1, max(1, d_max // 10)):
        assert series[d] == denumerant(coins, d)


def test_class_function_examples():
    q = denumerant_class_function(3, 2)
    assert {lam: int(v) for lam, v in q.values.items()} == {
        (1, 1, 1): 6,
        (2, 1): 2,
        (3,): 0,
    }
    assert denumerant_class_function(4, 0) == trivial_character(4)
    q41 = denumerant_class_function(4, 1)
    for lam in enumerate_partitions(4):
        assert q41.values[lam] == sum(1 for part in lam if part == 1)


@pytest.mark.parametrize("m,d", [(1, 0), (1, 7), (3, 2), (4, 3), (5, 4)])
def test_trace_identity_small(m, d):
    assert verify_trace_identity(m, d)


def test_trace_identity_cap():
    with pytest.raises(ResourceLimitError):
        verify_trace_identity(4, 4, max_gamma=3)


def test_induced_route_examples():
    assert denumerant_by_induced_characters(3, 2) == denumerant_class_function(3, 2)
    got = denumerant_by_induced_characters(2, 1)
    assert int(got.values[(1, 1)]) == 2
    assert int(got.values[(2,)]) == 0
    for m in (1, 2, 4):
        assert denumerant_by_induced_characters(m, 0) == trivial_character(m)


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("d", range(0, 7))
def test_literal_route_matches_collapsed(m, d):
    collapsed = denumerant_by_induced_characters(m, d)
    literal = denumerant_by_induced_characters(m, d, literal=True)
    assert collapsed == literal


def test_decomposition_examples():
    assert denumerant_decomposition(3, 2) == {(3,): 2, (2, 1): 2, (1, 1, 1): 0}
    assert denumerant_decomposition(3, 3) == {(3,): 3, (2, 1): 3, (1, 1, 1): 1}
    for m in (1, 2, 5):
        decomposition = denumerant_decomposition(m, 0)
        assert decomposition[(m,)] == 1
        assert all(v == 0 for pi, v in decomposition.items() if pi != (m,))


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("d", range(0, 9))
def test_three_routes_agree(m, d):
    by_counting = denumerant_class_function(m, d)
    by_induction = denumerant_by_induced_characters(m, d)
    multiplicities = denumerant_decomposition(m, d)
    by_decomposition = class_function_from_decomposition(m, multiplicities)
    assert by_counting == by_induction == by_decomposition


@pytest.mark.parametrize("m", range(1, 8))
@pytest.mark.parametrize("d", range(0, 11))
def test_decomposition_shape(m, d):
    multiplicities = denumerant_decomposition(m, d)
    assert all(v >= 0 for v in multiplicities.values())
    # the trivial multiplicity counts the orbits
    assert multiplicities[(m,)] == len(enumerate_partitions(d, max_length=m))
    # total dimension is the number of monomials
    table = character_table(m)
    identity = (1,) * m
    total = sum(v * table[pi][identity] for pi, v in multiplicities.items())
    assert total == gamma_size(m, d)

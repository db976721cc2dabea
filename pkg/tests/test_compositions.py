from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from opdiffeq.compositions import (
    CompositionPair,
    binomial,
    count_by_length,
    count_total,
    enumerate_compositions,
)

from conftest import run_length_pair, words


def brute_force_by_length(u, v):
    return Counter(len(run_length_pair(w)[0]) for w in words(u, v))


def test_worked_example_length_two():
    assert enumerate_compositions(2, 1, 2) == [
        CompositionPair((0, 2), (1, 0)),
        CompositionPair((1, 1), (1, 0)),
    ]


def test_identity_case():
    assert enumerate_compositions(0, 0, 1) == [CompositionPair((0,), (0,))]


@pytest.mark.parametrize("u, v, r", [(3, 2, 4), (0, 5, 2), (2, 2, 0), (-1, 2, 1)])
def test_infeasible_is_empty(u, v, r):
    assert enumerate_compositions(u, v, r) == []


def test_single_run_is_whole_word():
    assert enumerate_compositions(0, 4, 1) == [CompositionPair((0,), (4,))]
    assert enumerate_compositions(3, 2, 1) == [CompositionPair((3,), (2,))]


@pytest.mark.parametrize("u, v, r, expected", [(2, 1, 2, 2), (2, 1, 1, 1), (5, 7, 3, 210), (3, 2, 4, 0)])
def test_count_by_length(u, v, r, expected):
    assert count_by_length(u, v, r) == expected


def test_count_5_7_3_matches_brute_force():
    assert brute_force_by_length(5, 7)[3] == 210


@pytest.mark.parametrize("u, v, expected", [(2, 1, 3), (0, 9, 1), (4, 6, 210), (-1, 3, 0)])
def test_count_total(u, v, expected):
    assert count_total(u, v) == expected


def test_count_total_4_6_matches_brute_force():
    assert len(words(4, 6)) == 210


@pytest.mark.parametrize("u", range(8))
@pytest.mark.parametrize("v", range(8))
def test_enumeration_is_exactly_the_run_length_forms(u, v):
    expected = sorted(run_length_pair(w) for w in words(u, v))
    got = sorted(
        (c.tau, c.s) for r in range(1, min(u, v) + 2) for c in enumerate_compositions(u, v, r)
    )
    assert got == expected


small = st.integers(min_value=0, max_value=10)


@settings(deadline=None)
@given(small, small, st.integers(min_value=1, max_value=12))
def test_enumeration_size_matches_formula(u, v, r):
    assert len(enumerate_compositions(u, v, r)) == count_by_length(u, v, r)


@given(small, small)
def test_vandermonde(u, v):
    assert sum(count_by_length(u, v, r) for r in range(1, min(u, v) + 2)) == count_total(u, v)


@settings(deadline=None)
@given(small, small, st.integers(min_value=1, max_value=6))
def test_enumerated_pairs_are_valid_sorted_and_distinct(u, v, r):
    comps = enumerate_compositions(u, v, r)
    assert all(c.is_valid(u, v) and c.r == r for c in comps)
    keys = [c.tau + c.s for c in comps]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert comps == enumerate_compositions(u, v, r)


def test_is_valid_rejects_bad_interior():
    assert not CompositionPair((1, 0), (1, 1)).is_valid(1, 2)
    assert not CompositionPair((1, 1), (0, 1)).is_valid(2, 1)
    assert CompositionPair((0, 1), (1, 1)).is_valid(1, 2)


def test_binomial_is_exact_for_large_arguments():
    assert binomial(200, 100) == 90548514656103281165404177077484163874504589675413336841320
    assert binomial(3, 5) == 0

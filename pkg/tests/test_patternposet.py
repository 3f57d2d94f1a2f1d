from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from muposet.errors import IntervalTooLargeError
from muposet.patternposet import (
    MAX_ORACLE_LENGTH,
    MobiusCache,
    downset,
    interval,
    mobius,
    mobius_top,
)
from muposet.permcore import (
    Permutation,
    adjacencies,
    contains,
    descent_positions,
    increasing,
    one_descent_permutations,
)
from tests.factories import perm, permutations


def test_downset_of_a_chain() -> None:
    ds = downset(perm("123"))
    assert ds.members == {1: (perm("1"),), 2: (perm("12"),), 3: (perm("123"),)}
    assert len(ds) == 3
    assert list(ds) == [perm("1"), perm("12"), perm("123")]


def test_downset_of_21() -> None:
    ds = downset(perm("21"))
    assert set(ds) == {perm("1"), perm("21")}
    assert perm("12") not in ds
    assert ds.at_length(3) == ()


def test_downset_of_w3_misses_exactly_the_listed_length_five_patterns() -> None:
    ds = downset(perm("135246"))
    assert set(ds.at_length(5)) == {
        perm(word) for word in ("24135", "14235", "13245", "12435", "13425", "13524")
    }
    eligible = {
        sigma
        for sigma in one_descent_permutations(5)
        if len(adjacencies(sigma)) <= 2
    }
    missing = eligible - set(ds.at_length(5))
    assert len(missing) == 16
    assert {perm(w) for w in ("12354", "35124", "23514", "25134", "24513")} <= missing


@settings(max_examples=60, deadline=None)
@given(pi=permutations(max_size=6))
def test_downset_is_exactly_the_set_of_patterns(pi: Permutation) -> None:
    ds = downset(pi)
    for member in ds:
        assert contains(member, pi)
    for length in range(1, len(pi) + 1):
        for lower in ds.at_length(length):
            above = ds.interval(lower)
            for upper in ds:
                assert (upper in above) == contains(lower, upper)


def test_interval() -> None:
    pi = perm("2413")
    assert interval(perm("1"), pi) == frozenset(downset(pi))
    assert interval(pi, pi) == frozenset({pi})
    assert interval(perm("321"), perm("123456")) == frozenset()
    assert interval(perm("21"), pi) == {
        perm(word) for word in ("21", "231", "132", "213", "312", "2413")
    }


@pytest.mark.parametrize(
    ("lower", "upper", "expected"),
    [
        ("1", "123", 0),
        ("1", "24781356", -1),
        ("1", "246135", -6),
        ("21", "2413", 3),
        ("2413", "2413", 1),
        ("321", "123456", 0),
        ("1234", "12", 0),
    ],
)
def test_mobius(lower: str, upper: str, expected: int) -> None:
    assert mobius(perm(lower), perm(upper)) == expected


@pytest.mark.parametrize(
    ("pi", "expected"),
    [("132", 1), ("13524", 3), ("135246", -3), ("2413", -3), ("1", 1), ("21", -1)],
)
def test_mobius_top(pi: str, expected: int) -> None:
    assert mobius_top(perm(pi)) == expected


def test_mobius_is_identical_with_a_shared_cache(mobius_cache: MobiusCache) -> None:
    for pi in one_descent_permutations(6):
        assert mobius_top(pi, cache=mobius_cache) == mobius_top(pi)
    assert len(mobius_cache) > 0
    assert mobius(perm("21"), perm("2413"), cache=mobius_cache) == 3


def test_oracle_refuses_long_hosts() -> None:
    too_long = increasing(MAX_ORACLE_LENGTH + 1)
    with pytest.raises(IntervalTooLargeError, match="interval too large"):
        mobius_top(too_long)
    with pytest.raises(IntervalTooLargeError):
        downset(too_long)


@settings(max_examples=40, deadline=None)
@given(pi=permutations(min_size=2, max_size=7), data=st.data())
def test_mobius_values_sum_to_zero_over_each_interval(
    pi: Permutation, data: st.DataObject
) -> None:
    ds = downset(pi)
    sigma = data.draw(st.sampled_from([member for member in ds if member != pi]))
    values = ds.mobius_values(sigma)
    assert values[sigma] == 1
    assert sum(values.values()) == 0
    assert set(values) == ds.interval(sigma)


def test_chain_elements_above_two_have_zero_value() -> None:
    for k in range(3, 9):
        assert mobius_top(increasing(k)) == 0


def test_one_descent_downsets_stay_in_p01() -> None:
    for pi in one_descent_permutations(7):
        assert all(len(descent_positions(member)) <= 1 for member in downset(pi))


@settings(max_examples=40, deadline=None)
@given(pi=permutations(max_size=7))
def test_mobius_is_invariant_under_symmetries(pi: Permutation) -> None:
    value = mobius_top(pi)
    assert mobius_top(pi.reverse()) == value
    assert mobius_top(pi.complement()) == value
    assert mobius_top(pi.inverse()) == value

from __future__ import annotations

import pytest

from muposet.errors import OutOfClassError
from muposet.formulas import lemma3_contains
from muposet.permcore import (
    Permutation,
    adjacencies,
    contains,
    one_descent_permutations,
)
from tests.factories import perm

W3 = perm("135246")


@pytest.mark.parametrize(
    ("sigma", "expected"),
    [("12354", False), ("35124", False), ("4123", False), ("13425", True)],
)
def test_lemma3_examples(sigma: str, expected: bool) -> None:
    assert lemma3_contains(W3, perm(sigma)) is expected


def _eligible(length: int) -> list[Permutation]:
    return [
        sigma
        for sigma in one_descent_permutations(length)
        if len(adjacencies(sigma)) <= 2
    ]


def test_exception_lists_for_135246() -> None:
    two_adjacencies = [s for s in _eligible(5) if len(adjacencies(s)) == 2]
    unrelated_one = [
        s for s in _eligible(5) if len(adjacencies(s)) == 1 and s.first != 1
    ]
    unrelated_short = [
        s for s in _eligible(4) if len(adjacencies(s)) == 2 and s.first != 1
    ]
    assert len(two_adjacencies) == 12
    assert {str(s) for s in unrelated_one} == {"35124", "23514", "25134", "24513"}
    assert {str(s) for s in unrelated_short} == {"4123", "3412", "2341"}
    for sigma in [*two_adjacencies, *unrelated_one, *unrelated_short]:
        assert not lemma3_contains(W3, sigma)
        assert not contains(sigma, W3)


def test_everything_else_is_contained_in_135246() -> None:
    for length in range(2, 6):
        for sigma in _eligible(length):
            assert lemma3_contains(W3, sigma) == contains(sigma, W3), str(sigma)


def test_classifier_matches_containment_up_to_length_nine() -> None:
    for n in range(4, 10):
        hosts = [pi for pi in one_descent_permutations(n) if not adjacencies(pi)]
        assert hosts
        for pi in hosts:
            for length in range(2, n):
                for sigma in _eligible(length):
                    assert lemma3_contains(pi, sigma) == contains(sigma, pi), (
                        f"{sigma} in {pi}"
                    )


@pytest.mark.parametrize(
    ("pi", "sigma", "message"),
    [
        ("13425", "21", "without adjacencies"),
        ("123", "21", "without adjacencies"),
        ("135246", "123", "exactly one descent"),
        ("135246", "23451", "3 adjacencies"),
        ("135246", "246135", "not shorter"),
    ],
)
def test_lemma3_preconditions(pi: str, sigma: str, message: str) -> None:
    with pytest.raises(OutOfClassError, match=message):
        lemma3_contains(perm(pi), perm(sigma))

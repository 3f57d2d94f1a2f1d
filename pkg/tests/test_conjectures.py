from __future__ import annotations

import pytest

from muposet.errors import FormulaDomainError, OutOfClassError
from muposet.formulas import (
    binom,
    chat,
    conjecture1,
    conjecture2,
    conjecture2_stats,
    conjecture2_zero_rule,
)
from muposet.model import Shape
from muposet.permcore import at_most_one_descent
from tests.factories import perm

LONG_PI = perm(
    "2,4,6,7,9,12,14,16,18,21,23,24,26,28,1,3,5,8,10,11,13,15,17,19,20,22,25,27"
)


@pytest.mark.parametrize(
    ("x", "y", "expected"),
    [(5, 2, 10), (4, 0, 1), (0, 0, 1), (3, 5, 0), (-1, 0, 0), (4, -1, 0)],
)
def test_binom_convention(x: int, y: int, expected: int) -> None:
    assert binom(x, y) == expected


@pytest.mark.parametrize(
    ("args", "expected"),
    [((9, 2, 0, 9), 36), ((8, 0, 2, 10), 1), ((5, 7, 0, 4), 0), ((10, 1, 7, 9), 7)],
)
def test_chat(args: tuple[int, int, int, int], expected: int) -> None:
    assert chat(*args) == expected


@pytest.mark.parametrize(("k", "s"), [(4, 4), (-1, 3), (0, 0)])
def test_chat_domain(k: int, s: int) -> None:
    with pytest.raises(FormulaDomainError, match="0 <= k < s"):
        chat(5, 1, k, s)


@pytest.mark.parametrize(
    ("sigma", "shape", "n", "value", "branch"),
    [
        ("132", "M", 3, -4, "separable-M"),
        ("132", "W", 3, -4, "separable-W"),
        ("2413", "M", 3, 5, "non-separable"),
        ("21", "M", 2, 3, "separable-M"),
        ("21", "W", 2, 1, "separable-W"),
    ],
)
def test_conjecture1_examples(
    sigma: str, shape: Shape, n: int, value: int, branch: str
) -> None:
    result = conjecture1(perm(sigma), shape, n)
    assert result.value == value
    assert result.branch == branch
    assert result.m == len(sigma)
    assert result.n == n


def test_conjecture1_parameters() -> None:
    result = conjecture1(perm("2413"), "M", 3)
    assert (result.i, result.a) == (0, 0)
    unrelated = conjecture1(perm("2413"), "W", 3)
    assert unrelated.a == 1


def test_conjecture1_preconditions() -> None:
    with pytest.raises(OutOfClassError, match="exactly one descent"):
        conjecture1(perm("12"), "M", 3)
    with pytest.raises(OutOfClassError, match="not contained"):
        conjecture1(perm("3412"), "M", 2)


def test_conjecture2_stats_for_the_long_example() -> None:
    stats = conjecture2_stats(4, LONG_PI)
    assert stats.a == 4
    assert stats.n_hat == 28
    assert stats.A == (-1, 6, 10, 19, 23, 29)
    assert stats.J_hat == (2, 1, 3, 1, 2)
    assert stats.j_a == (2,)
    assert stats.j_b == (2, 1, 1)
    assert stats.epsilon == 1
    assert (stats.alpha, stats.beta) == (1, 3)
    assert stats.s == 9
    assert stats.t == 0
    assert (stats.lambda_, stats.sigma) == (11, 3)
    assert not stats.beta_ambiguous


def test_conjecture2_long_example_value() -> None:
    assert conjecture2(4, LONG_PI) == 73


def test_conjecture2_stats_for_m3() -> None:
    stats = conjecture2_stats(2, perm("246135"))
    assert stats.a == 0
    assert stats.n_hat == 6
    assert stats.J_hat == (3,)
    assert stats.j_a_pre == ()
    assert stats.j_b_pre == (3,)
    assert stats.j_b == ()
    assert stats.epsilon == 0
    assert stats.beta == 0
    assert (stats.lambda_, stats.sigma) == (5, 4)


@pytest.mark.parametrize(
    ("m", "pi", "expected"),
    [
        (2, "246135", 5),
        (2, "125346", 0),
        (2, "2413", 1),
        (2, "24135", -1),
        (2, "13524", -1),
        (2, "25134", -1),
        (2, "351246", 1),
    ],
)
def test_conjecture2_values(m: int, pi: str, expected: int) -> None:
    assert conjecture2(m, perm(pi)) == expected


def test_zero_rule() -> None:
    assert conjecture2_zero_rule(perm("125346"))
    assert conjecture2_zero_rule(perm("241356"))
    assert conjecture2_zero_rule(perm("234516"))
    assert not conjecture2_zero_rule(perm("246135"))


def test_conjecture2_preconditions() -> None:
    with pytest.raises(OutOfClassError, match="m >= 2"):
        conjecture2(1, perm("2413"))
    with pytest.raises(OutOfClassError, match="descents"):
        conjecture2(2, perm("321"))
    with pytest.raises(OutOfClassError):
        conjecture2_stats(2, perm("2143"))


def test_conjecture2_statistics_are_internally_consistent() -> None:
    for n in range(4, 9):
        for pi in at_most_one_descent(n):
            if conjecture2_zero_rule(pi):
                continue
            for m in (2, 3):
                stats = conjecture2_stats(m, pi)
                assert len(stats.J_hat) == stats.a + 1
                assert len(stats.j_a_pre) + len(stats.j_b_pre) == stats.a + 1
                assert stats.s == sum(stats.J_hat)
                assert stats.sigma == 2 * m - 2 * stats.a + stats.beta
                assert list(stats.j_a) == sorted(stats.j_a)
                assert list(stats.j_b) == sorted(stats.j_b, reverse=True)
                assert 0 not in stats.j_a
                assert 0 not in stats.j_b
                assert stats.epsilon >= 0

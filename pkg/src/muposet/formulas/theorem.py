"""Closed form for μ(1, π) when π has at most one descent."""

from __future__ import annotations

from math import comb

from ..errors import OutOfClassError
from ..model import CaseLabel, Theorem4Result
from ..patternposet import mobius_top
from ..permcore import (
    Permutation,
    adjacencies,
    descent_positions,
    has_triple_adjacency,
    in_p01,
)


def _signed(magnitude: int, n: int) -> int:
    # Nonzero values are positive exactly when n is odd.
    return magnitude if n % 2 == 1 else -magnitude


def theorem4(pi: Permutation) -> Theorem4Result:
    values = pi.values
    n = len(values)
    descents = descent_positions(pi)
    if len(descents) > 1:
        raise OutOfClassError(
            f"{pi} has {len(descents)} descents; the closed form covers at most one"
        )
    if n == 1:
        return Theorem4Result(1, "short-length")
    if n == 2:
        return Theorem4Result(-1, "short-length")

    if values[:2] == (1, 2) or values[-2:] == (n - 1, n):
        return Theorem4Result(0, "part1")
    if has_triple_adjacency(pi):
        return Theorem4Result(0, "part2")

    adj = adjacencies(pi)
    if len(adj) > 2:
        return Theorem4Result(0, "part3")
    if len(adj) == 2:
        first, second = adj
        if first.value > second.value:
            return Theorem4Result(_signed(1, n), "part4a")
        return Theorem4Result(0, "part4b")

    # Adjacency counts 0 and 1 only arise with exactly one descent once part 1
    # has been applied (an increasing π of length > 2 starts with 12).
    d = descents[0]
    if len(adj) == 1:
        i = adj[0].position
        label: CaseLabel
        if i < d:
            if values[0] != 1:
                magnitude, label = i, "part5a"
            else:
                magnitude, label = i - 1, "part5b"
        elif values[-1] != n:
            magnitude, label = n - i, "part5c"
        else:
            magnitude, label = n - i - 1, "part5d"
        return Theorem4Result(_signed(magnitude, n), label)

    if n % 2 == 1:
        return Theorem4Result(comb((n + 1) // 2, 2), "part6c")
    if values[0] == 1:
        return Theorem4Result(-comb(n // 2, 2), "part6a")
    return Theorem4Result(-comb(n // 2 + 1, 2), "part6b")


BASE_CASES: dict[str, tuple[int, CaseLabel]] = {
    "34125": (1, "part4a"),
    "14523": (1, "part4a"),
    "3412": (-1, "part4a"),
    "145236": (-1, "part4a"),
    "256134": (-1, "part4a"),
    "346125": (-1, "part4a"),
    "356124": (-1, "part4a"),
    "235614": (0, "part4b"),
    "236145": (0, "part4b"),
    "361245": (0, "part4b"),
    "231": (1, "part5a"),
    "312": (1, "part5c"),
    "13425": (1, "part5b"),
    "14235": (1, "part5d"),
    "23514": (1, "part5a"),
    "25134": (1, "part5c"),
    "1423": (-1, "part5c"),
    "3124": (-1, "part5d"),
    "1342": (-1, "part5b"),
    "2314": (-1, "part5a"),
    "134625": (-1, "part5b"),
    "136245": (-1, "part5c"),
    "235146": (-1, "part5a"),
    "251346": (-1, "part5d"),
    "24513": (2, "part5a"),
    "35124": (2, "part5c"),
    "245136": (-2, "part5a"),
    "351246": (-2, "part5d"),
    "146235": (-2, "part5c"),
    "135624": (-2, "part5b"),
    "132": (1, "part6c"),
    "213": (1, "part6c"),
    "1324": (-1, "part6a"),
    "2413": (-3, "part6b"),
    "13524": (3, "part6c"),
    "24135": (3, "part6c"),
    "135246": (-3, "part6a"),
    "246135": (-6, "part6b"),
}
"""Möbius values of the length 3–6 one-descent permutations not settled by
parts 1 and 2, with the case each falls under."""


def base_case_table() -> dict[Permutation, tuple[int, CaseLabel]]:
    return {Permutation.parse(word): entry for word, entry in BASE_CASES.items()}


def is_nonzero(pi: Permutation) -> bool:
    """μ(π) != 0, read off the closed form when π has at most one descent."""
    if in_p01(pi):
        return theorem4(pi).value != 0
    return mobius_top(pi) != 0

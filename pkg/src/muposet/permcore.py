"""Permutations and the pattern/descent/adjacency statistics built on them.

Positions and values are 1-based in every public contract (``π_1 … π_n``);
the backing tuple is ordinary 0-based Python.
"""

from __future__ import annotations

import itertools
import re
from collections import defaultdict
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Literal

from .errors import OutOfClassError, PermutationError

type Direction = Literal["increasing", "decreasing"]

_SEPARATOR_RE = re.compile(r"[\s,]+")
_LETTER_RE = re.compile(r"[0-9]+")

SEPARABLE_BASIS: tuple[tuple[int, ...], ...] = ((2, 4, 1, 3), (3, 1, 4, 2))
P01_BASIS: tuple[tuple[int, ...], ...] = ((3, 2, 1), (2, 1, 4, 3), (3, 1, 4, 2))


@dataclass(frozen=True, slots=True, order=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = self.values
        if not isinstance(values, tuple):
            values = tuple(values)
            object.__setattr__(self, "values", values)
        if not values:
            raise PermutationError("a permutation needs at least one letter")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PermutationError(
                f"{values!r} is not a permutation of 1..{len(values)}"
            )

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return parse_permutation(text)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return format_permutation(self)

    @property
    def first(self) -> int:
        return self.values[0]

    def reverse(self) -> Permutation:
        return _wrap(self.values[::-1])

    def complement(self) -> Permutation:
        top = len(self.values) + 1
        return _wrap(tuple(top - v for v in self.values))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.values)
        for index, value in enumerate(self.values, start=1):
            inv[value - 1] = index
        return _wrap(tuple(inv))


@dataclass(frozen=True, slots=True)
class AdjacencyInfo:
    position: int
    value: int
    direction: Direction = "increasing"


def _wrap(values: tuple[int, ...]) -> Permutation:
    # Skips validation; callers guarantee `values` is already a permutation.
    perm = object.__new__(Permutation)
    object.__setattr__(perm, "values", values)
    return perm


def _ranks(word: Sequence[int]) -> tuple[int, ...]:
    order = sorted(range(len(word)), key=word.__getitem__)
    ranks = [0] * len(word)
    for rank, index in enumerate(order, start=1):
        ranks[index] = rank
    return tuple(ranks)


def standardize(word: Sequence[int]) -> Permutation:
    if len(word) == 0:
        raise PermutationError("cannot standardize an empty word")
    if len(set(word)) != len(word):
        raise PermutationError(f"invalid word {tuple(word)!r}: duplicate entries")
    return _wrap(_ranks(word))


def parse_permutation(text: str) -> Permutation:
    raw = text.strip()
    if not raw:
        raise PermutationError("empty permutation text")
    if _SEPARATOR_RE.search(raw):
        parts = [part for part in _SEPARATOR_RE.split(raw) if part]
    elif _LETTER_RE.fullmatch(raw):
        parts = list(raw)
    else:
        parts = [raw]
    if not all(_LETTER_RE.fullmatch(part) for part in parts):
        raise PermutationError(f"invalid permutation word {text!r}")
    values = tuple(int(part) for part in parts)
    if any(value < 1 for value in values):
        raise PermutationError(
            f"invalid permutation word {text!r}: letters must be positive"
        )
    try:
        return Permutation(values)
    except PermutationError:
        raise PermutationError(
            f"invalid permutation word {text!r}: not a permutation of 1..{len(values)}"
        ) from None


def format_permutation(perm: Permutation) -> str:
    if len(perm.values) > 9:
        return ",".join(str(value) for value in perm.values)
    return "".join(str(value) for value in perm.values)


# -- pattern containment ---------------------------------------------------


def _value_neighbours(
    pattern: tuple[int, ...],
) -> tuple[list[int | None], list[int | None]]:
    """For each pattern position, the earlier positions just below/above it in value."""
    below: list[int | None] = []
    above: list[int | None] = []
    for q, value in enumerate(pattern):
        lo: int | None = None
        hi: int | None = None
        for p in range(q):
            other = pattern[p]
            if other < value and (lo is None or other > pattern[lo]):
                lo = p
            elif other > value and (hi is None or other < pattern[hi]):
                hi = p
        below.append(lo)
        above.append(hi)
    return below, above


def _contains_values(pattern: tuple[int, ...], host: tuple[int, ...]) -> bool:
    k = len(pattern)
    n = len(host)
    if k > n:
        return False
    below, above = _value_neighbours(pattern)
    chosen = [0] * k

    def extend(j: int, start: int) -> bool:
        if j == k:
            return True
        lo = chosen[below[j]] if below[j] is not None else 0
        hi = chosen[above[j]] if above[j] is not None else n + 1
        for i in range(start, n - (k - j) + 1):
            value = host[i]
            if lo < value < hi:
                chosen[j] = value
                if extend(j + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def contains(pattern: Permutation, host: Permutation) -> bool:
    return _contains_values(pattern.values, host.values)


def occurrence_count(pattern: Permutation, host: Permutation) -> int:
    """Number of subsequences of `host` order-isomorphic to `pattern`.

    Partial occurrences are grouped by (last host index, host values of the
    pattern positions that still constrain a later position) and counted
    stage by stage, so runs of unconstrained choices collapse into one state.
    """
    pat = pattern.values
    host_values = host.values
    k = len(pat)
    n = len(host_values)
    if k > n:
        return 0
    below, above = _value_neighbours(pat)
    needed: list[tuple[int, ...]] = []
    for j in range(k + 1):
        keep = {
            p
            for q in range(j, k)
            for p in (below[q], above[q])
            if p is not None and p < j
        }
        needed.append(tuple(sorted(keep)))

    states: dict[tuple[int, tuple[int, ...]], int] = {(-1, ()): 1}
    for j in range(k):
        slot = {p: index for index, p in enumerate(needed[j])}
        next_states: dict[tuple[int, tuple[int, ...]], int] = defaultdict(int)
        lo_slot = slot[below[j]] if below[j] is not None else None
        hi_slot = slot[above[j]] if above[j] is not None else None
        for (last, kept), count in states.items():
            lo = kept[lo_slot] if lo_slot is not None else 0
            hi = kept[hi_slot] if hi_slot is not None else n + 1
            for i in range(last + 1, n - (k - j) + 1):
                value = host_values[i]
                if not lo < value < hi:
                    continue
                carried = tuple(
                    value if p == j else kept[slot[p]] for p in needed[j + 1]
                )
                next_states[(i, carried)] += count
        states = next_states
    return sum(states.values())


def avoids(host: Permutation, patterns: Iterable[tuple[int, ...]]) -> bool:
    return not any(_contains_values(p, host.values) for p in patterns)


# -- descents and adjacencies ---------------------------------------------


def descent_positions(perm: Permutation) -> list[int]:
    values = perm.values
    return [i for i in range(1, len(values)) if values[i - 1] > values[i]]


def adjacencies(
    perm: Permutation, direction: Direction = "increasing"
) -> list[AdjacencyInfo]:
    step = 1 if direction == "increasing" else -1
    values = perm.values
    return [
        AdjacencyInfo(position=i, value=values[i - 1], direction=direction)
        for i in range(1, len(values))
        if values[i] == values[i - 1] + step
    ]


def longest_run(perm: Permutation, direction: Direction = "increasing") -> int:
    """Length of the longest monotone run of consecutive values (1 if none)."""
    step = 1 if direction == "increasing" else -1
    values = perm.values
    best = current = 1
    for i in range(1, len(values)):
        current = current + 1 if values[i] == values[i - 1] + step else 1
        best = max(best, current)
    return best


def has_triple_adjacency(
    perm: Permutation, direction: Direction = "increasing"
) -> bool:
    return longest_run(perm, direction) >= 3


# -- letter deletion and sums ---------------------------------------------


def _delete_index(values: tuple[int, ...], index: int) -> tuple[int, ...]:
    removed = values[index]
    return tuple(
        v - 1 if v > removed else v for j, v in enumerate(values) if j != index
    )


def delete_position(perm: Permutation, position: int) -> Permutation:
    n = len(perm.values)
    if n < 2:
        raise PermutationError("cannot delete a letter from a length-1 permutation")
    if not 1 <= position <= n:
        raise PermutationError(f"position {position} outside 1..{n}")
    return _wrap(_delete_index(perm.values, position - 1))


def delete_value(perm: Permutation, value: int) -> Permutation:
    n = len(perm.values)
    if n < 2:
        raise PermutationError("cannot delete a letter from a length-1 permutation")
    if not 1 <= value <= n:
        raise PermutationError(f"value {value} outside 1..{n}")
    return _wrap(_delete_index(perm.values, perm.values.index(value)))


def direct_sum(alpha: Permutation, beta: Permutation) -> Permutation:
    shift = len(alpha.values)
    return _wrap(alpha.values + tuple(v + shift for v in beta.values))


def is_decomposable(perm: Permutation) -> bool:
    running_max = 0
    for prefix, value in enumerate(perm.values[:-1], start=1):
        running_max = max(running_max, value)
        if running_max == prefix:
            return True
    return False


def is_separable(perm: Permutation) -> bool:
    return avoids(perm, SEPARABLE_BASIS)


def related(sigma: Permutation, pi: Permutation) -> bool:
    return (sigma.first == 1) == (pi.first == 1)


# -- named permutations and classes ---------------------------------------


def increasing(k: int) -> Permutation:
    if k < 1:
        raise PermutationError(f"increasing permutation needs k >= 1, got {k}")
    return _wrap(tuple(range(1, k + 1)))


def make_m(n: int) -> Permutation:
    """M_n = 2 4 … 2n 1 3 … 2n−1."""
    if n < 2:
        raise OutOfClassError(f"M_n is defined for n >= 2, got {n}")
    return _wrap(tuple(range(2, 2 * n + 1, 2)) + tuple(range(1, 2 * n, 2)))


def make_w(n: int) -> Permutation:
    """W_n = 1 3 … 2n−1 2 4 … 2n."""
    if n < 2:
        raise OutOfClassError(f"W_n is defined for n >= 2, got {n}")
    return _wrap(tuple(range(1, 2 * n, 2)) + tuple(range(2, 2 * n + 1, 2)))


def in_p01(perm: Permutation) -> bool:
    values = perm.values
    seen = False
    for i in range(1, len(values)):
        if values[i - 1] > values[i]:
            if seen:
                return False
            seen = True
    return True


def _from_first_run(n: int, mask: int) -> tuple[int, ...]:
    head = tuple(v for v in range(1, n + 1) if mask >> (v - 1) & 1)
    tail = tuple(v for v in range(1, n + 1) if not mask >> (v - 1) & 1)
    return head + tail


def one_descent_permutations(n: int) -> list[Permutation]:
    """All of P_1^n, sorted; a member is fixed by the value set of its first run."""
    if n < 1:
        raise PermutationError(f"length must be >= 1, got {n}")
    prefixes = {(1 << k) - 1 for k in range(n + 1)}
    found = [
        _wrap(_from_first_run(n, mask))
        for mask in range(1 << n)
        if mask not in prefixes
    ]
    return sorted(found)


def at_most_one_descent(n: int) -> list[Permutation]:
    return [increasing(n), *one_descent_permutations(n)]


def all_permutations(n: int) -> Iterator[Permutation]:
    for values in itertools.permutations(range(1, n + 1)):
        yield _wrap(values)

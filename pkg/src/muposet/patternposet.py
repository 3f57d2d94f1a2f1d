"""Downsets and intervals of the pattern poset, and the recursive Möbius oracle."""

from __future__ import annotations

import threading
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import IntervalTooLargeError
from .logging import get_logger
from .permcore import Permutation, _delete_index, _wrap, increasing

logger = get_logger(__name__)

MAX_ORACLE_LENGTH = 14

_BOTTOM = increasing(1)


@lru_cache(maxsize=1 << 16)
def _children(values: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    if len(values) < 2:
        return frozenset()
    return frozenset(_delete_index(values, index) for index in range(len(values)))


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Downset:
    """Every pattern of `root`, grouped by length.

    Members are indexed in (length, lexicographic) order; `_closure[i]` is the
    bitset of member indices contained in member `i` (itself included), which
    doubles as the containment relation between members.
    """

    root: Permutation
    members: dict[int, tuple[Permutation, ...]]
    _keys: tuple[tuple[int, ...], ...] = field(repr=False)
    _index: dict[tuple[int, ...], int] = field(repr=False)
    _closure: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self._keys)

    def __contains__(self, perm: object) -> bool:
        return isinstance(perm, Permutation) and perm.values in self._index

    def __iter__(self) -> Iterator[Permutation]:
        for length in sorted(self.members):
            yield from self.members[length]

    def at_length(self, length: int) -> tuple[Permutation, ...]:
        return self.members.get(length, ())

    def interval(self, sigma: Permutation) -> frozenset[Permutation]:
        bottom = self._index.get(sigma.values)
        if bottom is None:
            return frozenset()
        return frozenset(
            _wrap(key)
            for index, key in enumerate(self._keys)
            if self._closure[index] >> bottom & 1
        )

    def mobius_values(
        self, sigma: Permutation, *, cache: MobiusCache | None = None
    ) -> dict[Permutation, int]:
        """μ(σ, z) for every z in [σ, root], computed bottom-up by length."""
        bottom = self._index.get(sigma.values)
        if bottom is None:
            return {}
        bottom_bit = 1 << bottom
        mu: dict[int, int] = {}
        for index in range(bottom, len(self._keys)):
            closure = self._closure[index]
            if not closure & bottom_bit:
                continue
            if index == bottom:
                mu[index] = 1
                continue
            key = self._keys[index]
            cached = cache.get(sigma.values, key) if cache is not None else None
            if cached is not None:
                mu[index] = cached
                continue
            below = closure ^ (1 << index)
            value = -sum(mu[b] for b in _iter_bits(below) if b in mu)
            mu[index] = value
            if cache is not None:
                cache.put(sigma.values, key, value)
        return {_wrap(self._keys[index]): value for index, value in mu.items()}


class MobiusCache:
    """Process-wide memo of μ(σ, z) keyed by value tuples.

    Values are pure functions of the key, so concurrent writers can only ever
    store the same integer.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._values: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}

    def __len__(self) -> int:
        return len(self._values)

    def get(self, sigma: tuple[int, ...], z: tuple[int, ...]) -> int | None:
        return self._values.get((sigma, z))

    def put(self, sigma: tuple[int, ...], z: tuple[int, ...], value: int) -> None:
        with self._lock:
            self._values[(sigma, z)] = value


def _guard(perm: Permutation) -> None:
    if len(perm) > MAX_ORACLE_LENGTH:
        raise IntervalTooLargeError(length=len(perm), limit=MAX_ORACLE_LENGTH)


def downset(pi: Permutation) -> Downset:
    _guard(pi)
    seen: set[tuple[int, ...]] = {pi.values}
    frontier: set[tuple[int, ...]] = {pi.values}
    while frontier:
        next_frontier: set[tuple[int, ...]] = set()
        for values in frontier:
            next_frontier.update(_children(values) - seen)
        seen.update(next_frontier)
        frontier = next_frontier

    keys = tuple(sorted(seen, key=lambda values: (len(values), values)))
    index = {key: i for i, key in enumerate(keys)}
    closure: list[int] = []
    for i, key in enumerate(keys):
        mask = 1 << i
        for child in _children(key):
            mask |= closure[index[child]]
        closure.append(mask)

    members: dict[int, list[Permutation]] = {}
    for key in keys:
        members.setdefault(len(key), []).append(_wrap(key))
    return Downset(
        root=pi,
        members={length: tuple(perms) for length, perms in members.items()},
        _keys=keys,
        _index=index,
        _closure=tuple(closure),
    )


def interval(sigma: Permutation, pi: Permutation) -> frozenset[Permutation]:
    if len(sigma) > len(pi):
        return frozenset()
    return downset(pi).interval(sigma)


def mobius(
    sigma: Permutation, pi: Permutation, *, cache: MobiusCache | None = None
) -> int:
    _guard(pi)
    if len(sigma) > len(pi):
        return 0
    if sigma == pi:
        return 1
    if cache is not None:
        hit = cache.get(sigma.values, pi.values)
        if hit is not None:
            return hit
    ds = downset(pi)
    values = ds.mobius_values(sigma, cache=cache)
    logger.debug(
        "oracle.interval",
        lower=str(sigma),
        upper=str(pi),
        downset_size=len(ds),
        interval_size=len(values),
    )
    return values.get(pi, 0)


def mobius_top(pi: Permutation, *, cache: MobiusCache | None = None) -> int:
    return mobius(_BOTTOM, pi, cache=cache)

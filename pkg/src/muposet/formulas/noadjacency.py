"""Which patterns an adjacency-free one-descent permutation contains."""

from __future__ import annotations

from ..errors import OutOfClassError
from ..permcore import Permutation, adjacencies, descent_positions, related


def lemma3_contains(pi: Permutation, sigma: Permutation) -> bool:
    """Decide σ ≤ π from lengths, adjacency count and relatedness alone.

    π must have exactly one descent and no adjacencies; σ exactly one descent,
    at most two adjacencies and be strictly shorter than π.
    """
    n = len(pi)
    m = len(sigma)
    if len(descent_positions(pi)) != 1 or adjacencies(pi):
        raise OutOfClassError(f"{pi} is not a one-descent permutation without adjacencies")
    if len(descent_positions(sigma)) != 1:
        raise OutOfClassError(f"{sigma} does not have exactly one descent")
    k = len(adjacencies(sigma))
    if k > 2:
        raise OutOfClassError(f"{sigma} has {k} adjacencies; at most two are covered")
    if m >= n:
        raise OutOfClassError(f"{sigma} is not shorter than {pi}")

    if m == n - 1 and k == 2:
        return False
    if m == n - 1 and k == 1 and not related(sigma, pi):
        return False
    return not (m == n - 2 and k == 2 and not related(sigma, pi))

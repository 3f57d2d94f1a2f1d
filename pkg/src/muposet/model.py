"""Result records returned by the closed-form evaluators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

type CaseLabel = Literal[
    "short-length",
    "part1",
    "part2",
    "part3",
    "part4a",
    "part4b",
    "part5a",
    "part5b",
    "part5c",
    "part5d",
    "part6a",
    "part6b",
    "part6c",
]

type Shape = Literal["M", "W"]

type Side = Literal["before", "after"]

type ConjOneBranch = Literal["separable-M", "separable-W", "non-separable"]


@dataclass(frozen=True, slots=True)
class Theorem4Result:
    value: int
    case_label: CaseLabel


@dataclass(frozen=True, slots=True)
class ConjOneResult:
    value: int
    branch: ConjOneBranch
    m: int
    i: int
    a: int
    n: int
    shape: Shape


@dataclass(frozen=True, slots=True)
class ConjTwoStats:
    """Every intermediate statistic of the [M_m, π] formula.

    `A` holds the adjacency values in ascending order with the two phantom
    adjacencies at either end; `J_hat[k]` belongs to the gap between `A[k]`
    and `A[k + 1]`.
    """

    m: int
    n: int
    a: int
    n_hat: int
    A: tuple[int, ...]
    sides: tuple[Side, ...]
    J_hat: tuple[int, ...]
    j_a_pre: tuple[int, ...]
    j_b_pre: tuple[int, ...]
    j_a: tuple[int, ...]
    j_b: tuple[int, ...]
    epsilon: int
    alpha: int
    beta: int
    beta_after_zero_removal: int
    s: int
    t: int
    lambda_: int
    sigma: int

    @property
    def beta_ambiguous(self) -> bool:
        return self.beta != self.beta_after_zero_removal

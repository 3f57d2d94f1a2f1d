"""Evaluators for the two conjectured interval formulas.

The first covers intervals [σ, M_n] and [σ, W_n] for one-descent σ; the
second covers [M_m, π] for π with at most one descent and is driven by the
gap statistics collected in :class:`~muposet.model.ConjTwoStats`.
"""

from __future__ import annotations

from math import comb

from ..errors import FormulaDomainError, OutOfClassError
from ..model import ConjOneBranch, ConjOneResult, ConjTwoStats, Shape, Side
from ..permcore import (
    Permutation,
    adjacencies,
    contains,
    descent_positions,
    has_triple_adjacency,
    is_separable,
    make_m,
    make_w,
    related,
)


def binom(x: int, y: int) -> int:
    """C(x, y), taken as 0 whenever x < 0, y < 0 or x < y."""
    if x < 0 or y < 0 or x < y:
        return 0
    return comb(x, y)


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def conjecture1(sigma: Permutation, shape: Shape, n: int) -> ConjOneResult:
    target = make_m(n) if shape == "M" else make_w(n)
    if len(descent_positions(sigma)) != 1:
        raise OutOfClassError(f"{sigma} does not have exactly one descent")
    if not contains(sigma, target):
        raise OutOfClassError(f"{sigma} is not contained in {target}")

    m = len(sigma)
    i = len(adjacencies(sigma))
    a = 0 if related(sigma, target) else 1
    branch: ConjOneBranch
    if not is_separable(sigma):
        branch = "non-separable"
        magnitude = binom(n + (m - i - a) // 2, m)
    elif shape == "M":
        branch = "separable-M"
        magnitude = binom(n + 1, m)
    else:
        branch = "separable-W"
        magnitude = binom(n + m - i - 2, m)
    value = magnitude if m % 2 == 0 else -magnitude
    return ConjOneResult(
        value=value, branch=branch, m=m, i=i, a=a, n=n, shape=shape
    )


def chat(alpha: int, beta: int, k: int, s: int) -> int:
    if not 0 <= k < s:
        raise FormulaDomainError(f"Ĉ needs 0 <= k < s, got k={k}, s={s}")
    if 2 * k < s:
        return binom(alpha - 2 * k, beta)
    return binom(alpha - 2 * (s - k) + 1, beta)


def _check_target(m: int, pi: Permutation) -> int | None:
    if m < 2:
        raise OutOfClassError(f"M_m needs m >= 2, got {m}")
    descents = descent_positions(pi)
    if len(descents) > 1:
        raise OutOfClassError(
            f"{pi} has {len(descents)} descents; the formula covers at most one"
        )
    return descents[0] if descents else None


def conjecture2_stats(m: int, pi: Permutation) -> ConjTwoStats:
    descent = _check_target(m, pi)
    values = pi.values
    n = len(values)
    d = descent if descent is not None else n
    n_hat = n - 1 if values[-1] == n else n

    adj = sorted(adjacencies(pi), key=lambda info: info.value)
    a = len(adj)
    sides: list[Side] = ["before"]
    sides.extend("before" if info.position < d else "after" for info in adj)
    sides.append("after")
    A = (-1 if values[0] != 1 else 0, *(info.value for info in adj), n_hat + 1)

    J_hat = tuple((A[k + 1] - A[k] - 2) // 2 for k in range(a + 1))
    j_a_pre = tuple(J_hat[k] for k in range(a + 1) if sides[k] == sides[k + 1])
    j_b_pre = tuple(J_hat[k] for k in range(a + 1) if sides[k] != sides[k + 1])
    s = sum(J_hat)

    j_a = list(j_a_pre)
    j_b = list(j_b_pre)
    if not j_a:
        j_b.remove(max(j_b))
        epsilon = 0
    else:
        largest = max(j_a)
        j_a.remove(largest)
        epsilon = largest - sum(j_a)
    alpha = len(j_a)
    beta = len(j_b)
    j_a = [value for value in j_a if value != 0]
    j_b = [value for value in j_b if value != 0]
    if not j_b:
        epsilon = 0
    j_a.sort()
    j_b.sort(reverse=True)

    first_is_one = values[0] == 1
    last_is_n = values[-1] == n
    t = int(
        first_is_one
        and ((n % 2 == 0 and last_is_n) or (n % 2 == 1 and not last_is_n))
    )
    lambda_ = _ceil_half(n_hat) + m - _ceil_half(5 * a) + beta - t
    sigma = 2 * m - 2 * a + beta

    return ConjTwoStats(
        m=m,
        n=n,
        a=a,
        n_hat=n_hat,
        A=A,
        sides=tuple(sides),
        J_hat=J_hat,
        j_a_pre=j_a_pre,
        j_b_pre=j_b_pre,
        j_a=tuple(j_a),
        j_b=tuple(j_b),
        epsilon=max(0, epsilon),
        alpha=alpha,
        beta=beta,
        beta_after_zero_removal=len(j_b),
        s=s,
        t=t,
        lambda_=lambda_,
        sigma=sigma,
    )


def conjecture2_zero_rule(pi: Permutation) -> bool:
    values = pi.values
    n = len(values)
    if n >= 2 and (values[:2] == (1, 2) or values[-2:] == (n - 1, n)):
        return True
    return has_triple_adjacency(pi)


def conjecture2_magnitude(stats: ConjTwoStats) -> int:
    lam = stats.lambda_
    sig = stats.sigma
    s = stats.s
    j_a = stats.j_a
    j_b = stats.j_b
    len_a = len(j_a)
    len_b = len(j_b)

    def partial(seq: tuple[int, ...], kappa: int, tau: int) -> int:
        if kappa > tau:
            return 0
        return sum(seq[max(kappa, 0) : tau + 1])

    total = binom(lam, sig)
    for tau in range(len_b):
        tail = partial(j_b, tau + 1, len_b - 1)
        for gamma in range(tau + 1):
            for omega in range(tau - gamma, j_b[gamma] + tail):
                total -= chat(lam - tau - 2, sig - tau - 1, omega, s)
    for tau in range(len_a):
        top = lam - len_b - tau
        bottom = sig - len_b - tau
        for gamma in range(1, j_a[tau] + partial(j_a, 0, tau - 1) + 1):
            total += chat(top, bottom, gamma, s + 1)
        for omega in range(1, stats.epsilon + 1):
            total += chat(top, bottom, omega + 1, s + 1)
    return total


def conjecture2(m: int, pi: Permutation) -> int:
    _check_target(m, pi)
    if conjecture2_zero_rule(pi):
        return 0
    magnitude = conjecture2_magnitude(conjecture2_stats(m, pi))
    return magnitude if len(pi) % 2 == 0 else -magnitude

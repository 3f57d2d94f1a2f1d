"""Exhaustive campaigns that compare the closed forms with the Möbius oracle.

Every campaign splits its range into independent jobs, one per top element
(or per interval), runs them on worker threads and folds the outcomes back in
job order, so a report never depends on `jobs` or on completion order.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from functools import partial
from math import comb

import anyio
import anyio.to_thread

from ..errors import FormulaDomainError
from ..formulas import (
    conjecture1,
    conjecture2,
    conjecture2_stats,
    conjecture2_zero_rule,
    lemma3_contains,
    theorem4,
)
from ..logging import bind_run_context, clear_context, get_logger
from ..model import Shape, Theorem4Result
from ..patternposet import Downset, MobiusCache, downset, mobius, mobius_top
from ..permcore import (
    P01_BASIS,
    Permutation,
    adjacencies,
    all_permutations,
    at_most_one_descent,
    avoids,
    contains,
    delete_value,
    descent_positions,
    has_triple_adjacency,
    in_p01,
    increasing,
    longest_run,
    make_m,
    make_w,
    one_descent_permutations,
)
from ..settings import (
    BasisSettings,
    ConjectureOneSettings,
    ConjectureTwoSettings,
    LemmaSettings,
    Theorem4Settings,
    UnboundedSettings,
)
from .report import Mismatch, PropertyTally, VerificationReport

logger = get_logger(__name__)

LEMMA_PROPERTIES = ("lemma1", "corollary2", "lemma3", "lemma5", "lemma6", "basis")


@dataclass(frozen=True, slots=True)
class Check:
    prop: str
    mismatch: Mismatch | None = None
    notes: tuple[str, ...] = ()


type Job = Callable[[], list[Check]]


def default_jobs() -> int:
    return os.process_cpu_count() or 1


async def _gather(jobs: Sequence[Job], limit: int) -> list[list[Check]]:
    limiter = anyio.CapacityLimiter(limit)
    results: list[list[Check]] = [[] for _ in jobs]

    async def run_one(index: int, job: Job) -> None:
        results[index] = await anyio.to_thread.run_sync(job, limiter=limiter)

    async with anyio.create_task_group() as tg:
        for index, job in enumerate(jobs):
            tg.start_soon(run_one, index, job)
    return results


def run_campaign(
    name: str,
    parameters: dict[str, int],
    jobs: Sequence[Job],
    *,
    workers: int | None = None,
    counters: Iterable[str] = (),
    properties: Iterable[str] = (),
) -> VerificationReport:
    limit = workers if workers is not None else default_jobs()
    bind_run_context(campaign=name)
    started = time.perf_counter()
    logger.info("campaign.started", parameters=parameters, jobs=len(jobs), workers=limit)
    try:
        batches = anyio.run(_gather, jobs, max(1, limit))

        mismatches: list[Mismatch] = []
        tallies: dict[str, list[int]] = {prop: [0, 0] for prop in properties}
        notes: Counter[str] = Counter({key: 0 for key in counters})
        total = 0
        for batch in batches:
            for check in batch:
                total += 1
                tally = tallies.setdefault(check.prop, [0, 0])
                tally[0] += 1
                notes.update(check.notes)
                if check.mismatch is not None:
                    tally[1] += 1
                    mismatches.append(check.mismatch)
                    logger.warning(
                        "campaign.mismatch",
                        prop=check.prop,
                        pi=check.mismatch.pi,
                        sigma=check.mismatch.sigma,
                        formula_value=check.mismatch.formula_value,
                        oracle_value=check.mismatch.oracle_value,
                        case_label=check.mismatch.case_label,
                    )

        runtime_ms = int((time.perf_counter() - started) * 1000)
        report = VerificationReport(
            campaign=name,
            parameters=parameters,
            total_checked=total,
            passed=total - len(mismatches),
            failed=len(mismatches),
            mismatches=mismatches,
            runtime_ms=runtime_ms,
            properties=(
                {
                    prop: PropertyTally(checked=checked, failed=failed)
                    for prop, (checked, failed) in tallies.items()
                }
                if len(tallies) > 1
                else {}
            ),
            counters=dict(notes),
        )
        logger.info(
            "campaign.finished",
            total=report.total_checked,
            failed=report.failed,
            runtime_ms=runtime_ms,
        )
        return report
    finally:
        clear_context()


# -- theorem 4 -------------------------------------------------------------


def _zero_cases(pi: Permutation) -> int:
    values = pi.values
    n = len(values)
    adj = adjacencies(pi)
    matched = [
        values[:2] == (1, 2) or values[-2:] == (n - 1, n),
        has_triple_adjacency(pi),
        len(adj) > 2,
        len(adj) == 2 and adj[0].value < adj[1].value,
    ]
    return sum(matched)


def _check_theorem4(pi: Permutation, cache: MobiusCache) -> list[Check]:
    result: Theorem4Result = theorem4(pi)
    oracle = mobius_top(pi, cache=cache)
    n = len(pi)
    notes: list[str] = []
    ok = result.value == oracle
    if oracle != 0 and (oracle > 0) != (n % 2 == 1):
        notes.append("sign_violations")
        ok = False
    if n > 2 and _zero_cases(pi) >= 2:
        notes.append("overlapping_zero_cases")
        ok = ok and oracle == 0
    mismatch = None
    if not ok:
        mismatch = Mismatch(
            pi=str(pi),
            sigma=None,
            formula_value=result.value,
            oracle_value=oracle,
            case_label=result.case_label,
        )
    return [Check("theorem4", mismatch, tuple(notes))]


def verify_theorem4(max_n: int, *, jobs: int | None = None) -> VerificationReport:
    settings = Theorem4Settings().with_overrides(max_n=max_n)
    cache = MobiusCache()
    work: list[Job] = [
        partial(_check_theorem4, pi, cache)
        for n in range(1, settings.max_n + 1)
        for pi in at_most_one_descent(n)
    ]
    return run_campaign(
        "theorem4",
        {"max_n": settings.max_n},
        work,
        workers=jobs,
        counters=("sign_violations", "overlapping_zero_cases"),
    )


# -- conjecture 1 ----------------------------------------------------------


def _check_conjecture1(
    ds: Downset, shape: Shape, k: int, sigma: Permutation
) -> list[Check]:
    oracle = ds.mobius_values(sigma).get(ds.root, 0)
    result = conjecture1(sigma, shape, k)
    mismatch = None
    if result.value != oracle:
        mismatch = Mismatch(
            pi=str(ds.root),
            sigma=str(sigma),
            formula_value=result.value,
            oracle_value=oracle,
            case_label=result.branch,
        )
    return [Check("conj1", mismatch)]


def verify_conjecture1(max_n: int, *, jobs: int | None = None) -> VerificationReport:
    settings = ConjectureOneSettings().with_overrides(max_n=max_n)
    work: list[Job] = []
    for k in range(2, settings.max_n + 1):
        targets: tuple[tuple[Shape, Permutation], ...] = (
            ("M", make_m(k)),
            ("W", make_w(k)),
        )
        for shape, target in targets:
            ds = downset(target)
            work.extend(
                partial(_check_conjecture1, ds, shape, k, sigma)
                for sigma in ds
                if sigma != target and len(descent_positions(sigma)) == 1
            )
    return run_campaign("conj1", {"max_n": settings.max_n}, work, workers=jobs)


# -- conjecture 2 ----------------------------------------------------------


def _check_conjecture2(pi: Permutation, max_m: int) -> list[Check]:
    ds = downset(pi)
    checks: list[Check] = []
    for m in range(2, max_m + 1):
        if 2 * m > len(pi):
            break
        target = make_m(m)
        if target not in ds:
            continue
        oracle = ds.mobius_values(target).get(pi, 0)
        notes: list[str] = []
        if not conjecture2_zero_rule(pi) and conjecture2_stats(m, pi).beta_ambiguous:
            notes.append("beta_ambiguous")
        try:
            value: int | None = conjecture2(m, pi)
            label = None
        except FormulaDomainError as exc:
            logger.warning("conj2.domain_error", m=m, pi=str(pi), error=str(exc))
            notes.append("domain_errors")
            value, label = None, "domain-error"
        mismatch = None
        if value != oracle:
            mismatch = Mismatch(
                pi=str(pi),
                sigma=str(target),
                formula_value=value,
                oracle_value=oracle,
                case_label=label,
            )
        checks.append(Check("conj2", mismatch, tuple(notes)))
    return checks


def verify_conjecture2(
    max_m: int, max_n: int, *, jobs: int | None = None
) -> VerificationReport:
    settings = ConjectureTwoSettings().with_overrides(max_m=max_m, max_n=max_n)
    work: list[Job] = [
        partial(_check_conjecture2, pi, settings.max_m)
        for n in range(4, settings.max_n + 1)
        for pi in at_most_one_descent(n)
    ]
    return run_campaign(
        "conj2",
        {"max_m": settings.max_m, "max_n": settings.max_n},
        work,
        workers=jobs,
        counters=("beta_ambiguous", "domain_errors"),
    )


# -- lemmas ----------------------------------------------------------------


def _zero_check(
    prop: str, pi: Permutation, sigma: Permutation, cache: MobiusCache
) -> Check:
    value = mobius(sigma, pi, cache=cache)
    if value == 0:
        return Check(prop)
    return Check(
        prop,
        Mismatch(
            pi=str(pi),
            sigma=str(sigma),
            formula_value=0,
            oracle_value=value,
            case_label=prop,
        ),
    )


def _check_runs(n: int, cache: MobiusCache) -> list[Check]:
    bottom = increasing(1)
    checks: list[Check] = []
    for pi in all_permutations(n):
        up = longest_run(pi, "increasing")
        down = longest_run(pi, "decreasing")
        if up >= 3 or down >= 3:
            checks.append(_zero_check("lemma1", pi, bottom, cache))
        run = max(up, down)
        for k in (3, 4, 5):
            if run >= k:
                checks.append(_zero_check("corollary2", pi, increasing(k - 2), cache))
    return checks


def _check_lemma3(pi: Permutation) -> list[Check]:
    checks: list[Check] = []
    for length in range(2, len(pi)):
        for sigma in one_descent_permutations(length):
            if len(adjacencies(sigma)) > 2:
                continue
            predicted = lemma3_contains(pi, sigma)
            actual = contains(sigma, pi)
            mismatch = None
            if predicted != actual:
                mismatch = Mismatch(
                    pi=str(pi),
                    sigma=str(sigma),
                    formula_value=int(predicted),
                    oracle_value=int(actual),
                    case_label="lemma3",
                )
            checks.append(Check("lemma3", mismatch))
    return checks


def _pair_cancels(sigma: Permutation, cache: MobiusCache) -> bool:
    m = len(sigma)
    count = len(adjacencies(sigma))
    own = mobius_top(sigma, cache=cache)
    if count == 1:
        adj = adjacencies(sigma)[0]
        letter = m if adj.position < descent_positions(sigma)[0] else 1
        return mobius_top(delete_value(sigma, letter), cache=cache) + own == 0
    for letter in (1, m):
        smaller = delete_value(sigma, letter)
        if len(adjacencies(smaller)) != count:
            continue
        if mobius_top(smaller, cache=cache) + own == 0:
            return True
    return False


def _lemma5_applies(sigma: Permutation) -> bool:
    m = len(sigma)
    values = [adj.value for adj in adjacencies(sigma)]
    edge = {1, m - 1}
    if len(values) == 1:
        return values[0] not in edge
    return len(values) == 2 and any(value not in edge for value in values)


def _lemma6_applies(sigma: Permutation) -> bool:
    m = len(sigma)
    values = [adj.value for adj in adjacencies(sigma)]
    return bool(values) and all(value not in (1, m - 1) for value in values)


def _check_cancellation(m: int, cache: MobiusCache) -> list[Check]:
    checks: list[Check] = []
    for sigma in one_descent_permutations(m):
        own = mobius_top(sigma, cache=cache)
        if own == 0:
            continue
        if m >= 4 and _lemma5_applies(sigma):
            mismatch = None
            if not _pair_cancels(sigma, cache):
                mismatch = Mismatch(
                    pi=str(sigma),
                    sigma=None,
                    formula_value=0,
                    oracle_value=own,
                    case_label="lemma5",
                )
            checks.append(Check("lemma5", mismatch))
        if m >= 5 and _lemma6_applies(sigma):
            without_top = delete_value(sigma, m)
            total = (
                own
                + mobius_top(delete_value(sigma, 1), cache=cache)
                + mobius_top(without_top, cache=cache)
                + mobius_top(delete_value(without_top, 1), cache=cache)
            )
            mismatch = None
            if total != 0:
                mismatch = Mismatch(
                    pi=str(sigma),
                    sigma=None,
                    formula_value=0,
                    oracle_value=total,
                    case_label="lemma6",
                )
            checks.append(Check("lemma6", mismatch))
    return checks


def _check_basis(n: int) -> list[Check]:
    checks: list[Check] = []
    for pi in all_permutations(n):
        by_descents = in_p01(pi)
        by_basis = avoids(pi, P01_BASIS)
        mismatch = None
        if by_descents != by_basis:
            mismatch = Mismatch(
                pi=str(pi),
                sigma=None,
                formula_value=int(by_basis),
                oracle_value=int(by_descents),
                case_label="basis",
            )
        checks.append(Check("basis", mismatch))
    return checks


def verify_lemmas(max_n: int, *, jobs: int | None = None) -> VerificationReport:
    settings = LemmaSettings().with_overrides(max_n=max_n)
    top = settings.max_n
    cache = MobiusCache()
    work: list[Job] = [partial(_check_runs, n, cache) for n in range(3, top + 1)]
    work.extend(
        partial(_check_lemma3, pi)
        for n in range(4, top + 1)
        for pi in one_descent_permutations(n)
        if not adjacencies(pi)
    )
    work.extend(partial(_check_cancellation, m, cache) for m in range(4, top + 1))
    work.extend(partial(_check_basis, n) for n in range(1, top + 1))
    return run_campaign(
        "lemmas",
        {"max_n": top},
        work,
        workers=jobs,
        properties=LEMMA_PROPERTIES,
    )


def verify_basis(max_n: int, *, jobs: int | None = None) -> VerificationReport:
    settings = BasisSettings().with_overrides(max_n=max_n)
    work: list[Job] = [
        partial(_check_basis, n) for n in range(1, settings.max_n + 1)
    ]
    return run_campaign("basis", {"max_n": settings.max_n}, work, workers=jobs)


# -- unboundedness ---------------------------------------------------------


def _check_unbounded(k: int, oracle_max_n: int) -> list[Check]:
    target = make_m(k)
    result = theorem4(target)
    expected = -comb(k + 1, 2)
    oracle = mobius_top(target) if k <= oracle_max_n else None
    ok = result.value == expected and (oracle is None or oracle == expected)
    mismatch = None
    if not ok:
        mismatch = Mismatch(
            pi=str(target),
            sigma=None,
            formula_value=result.value,
            oracle_value=oracle if oracle is not None else expected,
            case_label=result.case_label,
        )
    return [Check("unbounded", mismatch)]


def verify_unbounded(
    max_n: int, *, oracle_max_n: int | None = None, jobs: int | None = None
) -> VerificationReport:
    settings = UnboundedSettings().with_overrides(
        max_n=max_n, oracle_max_n=oracle_max_n
    )
    work: list[Job] = [
        partial(_check_unbounded, k, settings.oracle_max_n)
        for k in range(2, settings.max_n + 1)
    ]
    return run_campaign(
        "unbounded",
        {"max_n": settings.max_n, "oracle_max_n": settings.oracle_max_n},
        work,
        workers=jobs,
    )

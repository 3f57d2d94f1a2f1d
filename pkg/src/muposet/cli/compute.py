"""Single-shot commands: one oracle query or one closed-form evaluation."""

from __future__ import annotations

from typing import Any

import msgspec
import typer

from ..errors import MuposetError
from ..formulas import conjecture1, conjecture2, conjecture2_stats, theorem4
from ..model import ConjTwoStats
from ..patternposet import downset, mobius
from ..permcore import adjacencies, descent_positions
from .common import ShapeOption, _exit_error, _parse_perm_or_exit


def mobius_cmd(
    lower: str = typer.Option(..., "--lower", help="Bottom of the interval."),
    upper: str = typer.Option(..., "--upper", help="Top of the interval."),
) -> None:
    """Print μ(lower, upper) computed by the recursive oracle."""
    sigma = _parse_perm_or_exit(lower, label="--lower")
    pi = _parse_perm_or_exit(upper, label="--upper")
    try:
        value = mobius(sigma, pi)
    except MuposetError as exc:
        _exit_error(exc)
    typer.echo(str(value))


def downset_cmd(
    perm: str = typer.Argument(..., help="Permutation whose patterns to list."),
    min_length: int = typer.Option(
        1, "--min-length", min=1, help="Skip patterns shorter than this."
    ),
) -> None:
    """List every pattern of a permutation, grouped by length."""
    pi = _parse_perm_or_exit(perm, label="permutation")
    try:
        ds = downset(pi)
    except MuposetError as exc:
        _exit_error(exc)
    count = 0
    for length in sorted(ds.members):
        if length < min_length:
            continue
        for member in ds.at_length(length):
            typer.echo(str(member))
            count += 1
    typer.echo(f"{count} permutations")


def theorem4_cmd(
    perm: str = typer.Argument(..., help="Permutation with at most one descent."),
    explain: bool = typer.Option(
        False, "--explain", help="Also print the case and the statistics used."
    ),
) -> None:
    """Print μ(π) from the closed form for permutations with at most one descent."""
    pi = _parse_perm_or_exit(perm, label="permutation")
    try:
        result = theorem4(pi)
    except MuposetError as exc:
        _exit_error(exc)
    typer.echo(str(result.value))
    if not explain:
        return
    descents = descent_positions(pi)
    adj = adjacencies(pi)
    typer.echo(f"case: {result.case_label}")
    typer.echo(f"descent: {descents[0] if descents else 'none'}")
    listed = ", ".join(f"{info.position}:{info.value}" for info in adj)
    typer.echo(f"adjacencies: {listed or 'none'}")


def conj1_cmd(
    sigma: str = typer.Option(..., "--sigma", help="One-descent bottom element."),
    shape: ShapeOption = typer.Option(..., "--shape", help="Target M_n or W_n."),
    n: int = typer.Option(..., "--n", help="Target parameter n >= 2."),
) -> None:
    """Evaluate the conjectured μ(σ, M_n) or μ(σ, W_n)."""
    bottom = _parse_perm_or_exit(sigma, label="--sigma")
    try:
        result = conjecture1(bottom, "M" if shape is ShapeOption.M else "W", n)
    except MuposetError as exc:
        _exit_error(exc)
    typer.echo(str(result.value))
    typer.echo(f"branch: {result.branch}")


def _stats_document(stats: ConjTwoStats) -> dict[str, Any]:
    doc = msgspec.to_builtins(stats)
    doc["lambda"] = doc.pop("lambda_")
    doc["beta_ambiguous"] = stats.beta_ambiguous
    return doc


def conj2_cmd(
    m: int = typer.Option(..., "--m", help="Bottom element M_m, m >= 2."),
    pi: str = typer.Option(..., "--pi", help="Top element with at most one descent."),
    stats: bool = typer.Option(
        False, "--stats", help="Also print the intermediate statistics as JSON."
    ),
) -> None:
    """Evaluate the conjectured μ(M_m, π)."""
    top = _parse_perm_or_exit(pi, label="--pi")
    try:
        value = conjecture2(m, top)
        record = conjecture2_stats(m, top) if stats else None
    except MuposetError as exc:
        _exit_error(exc)
    typer.echo(str(value))
    if record is not None:
        encoded = msgspec.json.encode(_stats_document(record))
        typer.echo(msgspec.json.format(encoded, indent=2).decode("utf-8"))

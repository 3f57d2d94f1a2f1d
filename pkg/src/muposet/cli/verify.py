from __future__ import annotations

from collections.abc import Callable
from pathlib import Path
from typing import Any

import typer

from ..errors import MuposetError
from ..harness import (
    VerificationReport,
    default_jobs,
    render_report,
    verify_basis,
    verify_conjecture1,
    verify_conjecture2,
    verify_lemmas,
    verify_theorem4,
    verify_unbounded,
)
from ..settings import CampaignName, load_settings
from .common import OutputFormat, _emit, _exit_error

_FORMAT_OPTION = typer.Option(
    OutputFormat.text, "--format", help="Report format: json, csv or text."
)
_JOBS_OPTION = typer.Option(
    None, "--jobs", min=1, help="Worker threads (default: available CPUs)."
)
_EXTENDED_OPTION = typer.Option(
    False, "--extended", help="Use the long-running full ranges."
)
_OUTPUT_OPTION = typer.Option(
    None, "--output", help="Write the report to this file instead of stdout."
)
_CONFIG_PATH_OPTION = typer.Option(
    None, "--config-path", help="TOML file with campaign defaults."
)
_MAX_N_OPTION = typer.Option(None, "--max-n", help="Largest length (or index) checked.")


def _run_verify(
    name: CampaignName,
    run: Callable[..., VerificationReport],
    overrides: dict[str, int | None],
    *,
    fmt: OutputFormat,
    jobs: int | None,
    extended: bool,
    output: Path | None,
    config_path: Path | None,
) -> None:
    try:
        settings = load_settings(config_path)
        campaign = settings.campaign(name, extended=extended).with_overrides(
            **overrides
        )
        params: dict[str, Any] = campaign.model_dump()
        workers = jobs or settings.jobs or default_jobs()
        report = run(**params, jobs=workers)
        _emit(render_report(report, fmt.value), output)
    except MuposetError as exc:
        _exit_error(exc)
    if not report.ok:
        raise typer.Exit(code=1)


def verify_theorem4_cmd(
    max_n: int | None = _MAX_N_OPTION,
    fmt: OutputFormat = _FORMAT_OPTION,
    jobs: int | None = _JOBS_OPTION,
    extended: bool = _EXTENDED_OPTION,
    output: Path | None = _OUTPUT_OPTION,
    config_path: Path | None = _CONFIG_PATH_OPTION,
) -> None:
    """Closed form for μ(π) against the oracle, every π with at most one descent."""
    _run_verify(
        "theorem4",
        verify_theorem4,
        {"max_n": max_n},
        fmt=fmt,
        jobs=jobs,
        extended=extended,
        output=output,
        config_path=config_path,
    )


def verify_conj1_cmd(
    max_n: int | None = _MAX_N_OPTION,
    fmt: OutputFormat = _FORMAT_OPTION,
    jobs: int | None = _JOBS_OPTION,
    extended: bool = _EXTENDED_OPTION,
    output: Path | None = _OUTPUT_OPTION,
    config_path: Path | None = _CONFIG_PATH_OPTION,
) -> None:
    """μ(σ, M_k) and μ(σ, W_k) formula against the oracle for every k <= max-n."""
    _run_verify(
        "conj1",
        verify_conjecture1,
        {"max_n": max_n},
        fmt=fmt,
        jobs=jobs,
        extended=extended,
        output=output,
        config_path=config_path,
    )


def verify_conj2_cmd(
    max_m: int | None = typer.Option(None, "--max-m", help="Largest m in M_m."),
    max_n: int | None = _MAX_N_OPTION,
    fmt: OutputFormat = _FORMAT_OPTION,
    jobs: int | None = _JOBS_OPTION,
    extended: bool = _EXTENDED_OPTION,
    output: Path | None = _OUTPUT_OPTION,
    config_path: Path | None = _CONFIG_PATH_OPTION,
) -> None:
    """μ(M_m, π) formula against the oracle for every π containing M_m."""
    _run_verify(
        "conj2",
        verify_conjecture2,
        {"max_m": max_m, "max_n": max_n},
        fmt=fmt,
        jobs=jobs,
        extended=extended,
        output=output,
        config_path=config_path,
    )


def verify_lemmas_cmd(
    max_n: int | None = _MAX_N_OPTION,
    fmt: OutputFormat = _FORMAT_OPTION,
    jobs: int | None = _JOBS_OPTION,
    extended: bool = _EXTENDED_OPTION,
    output: Path | None = _OUTPUT_OPTION,
    config_path: Path | None = _CONFIG_PATH_OPTION,
) -> None:
    """Triple adjacency, containment and cancellation properties, plus the basis."""
    _run_verify(
        "lemmas",
        verify_lemmas,
        {"max_n": max_n},
        fmt=fmt,
        jobs=jobs,
        extended=extended,
        output=output,
        config_path=config_path,
    )


def verify_basis_cmd(
    max_n: int | None = _MAX_N_OPTION,
    fmt: OutputFormat = _FORMAT_OPTION,
    jobs: int | None = _JOBS_OPTION,
    extended: bool = _EXTENDED_OPTION,
    output: Path | None = _OUTPUT_OPTION,
    config_path: Path | None = _CONFIG_PATH_OPTION,
) -> None:
    """At most one descent iff avoiding 321, 2143 and 3142."""
    _run_verify(
        "basis",
        verify_basis,
        {"max_n": max_n},
        fmt=fmt,
        jobs=jobs,
        extended=extended,
        output=output,
        config_path=config_path,
    )


def verify_unbounded_cmd(
    max_n: int | None = _MAX_N_OPTION,
    oracle_max_n: int | None = typer.Option(
        None, "--oracle-max-n", help="Largest k also confirmed by the oracle."
    ),
    fmt: OutputFormat = _FORMAT_OPTION,
    jobs: int | None = _JOBS_OPTION,
    extended: bool = _EXTENDED_OPTION,
    output: Path | None = _OUTPUT_OPTION,
    config_path: Path | None = _CONFIG_PATH_OPTION,
) -> None:
    """μ(M_k) = -C(k+1, 2) for every k <= max-n."""
    _run_verify(
        "unbounded",
        verify_unbounded,
        {"max_n": max_n, "oracle_max_n": oracle_max_n},
        fmt=fmt,
        jobs=jobs,
        extended=extended,
        output=output,
        config_path=config_path,
    )


def create_verify_app() -> typer.Typer:
    verify_app = typer.Typer(help="Run a verification campaign against the oracle.")
    verify_app.command(name="theorem4")(verify_theorem4_cmd)
    verify_app.command(name="conj1")(verify_conj1_cmd)
    verify_app.command(name="conj2")(verify_conj2_cmd)
    verify_app.command(name="lemmas")(verify_lemmas_cmd)
    verify_app.command(name="basis")(verify_basis_cmd)
    verify_app.command(name="unbounded")(verify_unbounded_cmd)
    return verify_app

from __future__ import annotations

from enum import StrEnum
from pathlib import Path
from typing import NoReturn

import typer

from ..config import atomic_write_text
from ..errors import MuposetError
from ..permcore import Permutation, parse_permutation


class OutputFormat(StrEnum):
    json = "json"
    csv = "csv"
    text = "text"


class LogFormatOption(StrEnum):
    console = "console"
    json = "json"


class ShapeOption(StrEnum):
    M = "M"
    W = "W"


def _exit_error(exc: MuposetError, *, code: int = 2) -> NoReturn:
    typer.echo(f"error: {exc}", err=True)
    raise typer.Exit(code=code) from exc


def _parse_perm_or_exit(text: str, *, label: str) -> Permutation:
    try:
        return parse_permutation(text)
    except MuposetError as exc:
        typer.echo(f"error: invalid {label} {text!r}: {exc}", err=True)
        raise typer.Exit(code=2) from exc


def _emit(payload: str, output: Path | None) -> None:
    if output is None:
        typer.echo(payload, nl=False)
        return
    atomic_write_text(output.expanduser(), payload)

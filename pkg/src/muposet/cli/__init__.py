from __future__ import annotations

import typer

from .. import __version__
from ..logging import setup_logging
from .common import LogFormatOption
from .compute import conj1_cmd, conj2_cmd, downset_cmd, mobius_cmd, theorem4_cmd
from .verify import create_verify_app


def _print_version_and_exit() -> None:
    typer.echo(__version__)
    raise typer.Exit()


def _version_callback(value: bool) -> None:
    if value:
        _print_version_and_exit()


def app_main(
    version: bool = typer.Option(
        False,
        "--version",
        help="Show the version and exit.",
        callback=_version_callback,
        is_eager=True,
    ),
    debug: bool = typer.Option(
        False,
        "--debug/--no-debug",
        help="Log debug events (oracle intervals, campaign progress) to stderr.",
    ),
    log_format: LogFormatOption = typer.Option(
        LogFormatOption.console,
        "--log-format",
        help="Render stderr logs as console lines or JSON.",
    ),
) -> None:
    """Möbius function of the permutation pattern poset."""
    setup_logging(debug=debug, log_format=log_format.value)


def create_app() -> typer.Typer:
    app = typer.Typer(
        add_completion=False,
        no_args_is_help=True,
        help="Möbius function of the permutation pattern poset.",
    )
    app.command(name="mobius")(mobius_cmd)
    app.command(name="downset")(downset_cmd)
    app.command(name="theorem4")(theorem4_cmd)
    app.command(name="conj1")(conj1_cmd)
    app.command(name="conj2")(conj2_cmd)
    app.add_typer(create_verify_app(), name="verify")
    app.callback()(app_main)
    return app


def main() -> None:
    app = create_app()
    app()


if __name__ == "__main__":
    main()

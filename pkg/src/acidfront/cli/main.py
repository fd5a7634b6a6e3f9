#!/usr/bin/env python3
"""
acidfront - traveling-front lab for acid-mediated tumour invasion

Usage:
    acidfront list                                  # Builtin experiments and sweeps
    acidfront run --set experiment=oneeq_heterogeneous
    acidfront sweep --set sweep=r_sweep             # Speed vs r
    acidfront epsilon                               # Epsilon transition
    acidfront refine                                # Mesh refinement vs exact front

Exit codes: 0 success, 1 invalid input, 2 numerical failure.
"""

import logging
import sys

import typer
from rich.console import Console

from .. import __version__
from ..config import get_settings
from .commands import registry, run, studies

# Create the main app
app = typer.Typer(
    name="acidfront",
    help="Simulate and analyse acid-mediated tumour invasion fronts.",
    no_args_is_help=True,
    add_completion=True,
)

# Console for output
console = Console()


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        console.print(f"acidfront version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False, "--version", "-v", callback=version_callback, is_eager=True, help="Show version"
    ),
) -> None:
    """
    acidfront - finite-volume runs of the acid-mediated invasion model and its reductions.
    """
    logging.basicConfig(
        level=get_settings().log_level.upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


# Register commands directly on the app
app.command(name="list")(registry.list_builtins)
app.command(name="run")(run.run)
app.command(name="sweep")(studies.run_sweep)
app.command(name="epsilon")(studies.run_epsilon)
app.command(name="refine")(studies.run_refine)


def cli() -> None:
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    cli()

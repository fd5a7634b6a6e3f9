"""Registry listing command for the acidfront CLI."""

from ...experiments import SWEEPS, list_experiments
from .. import display


def list_builtins() -> None:
    """List the builtin experiments and sweeps."""
    display.display_experiments(list_experiments(), {name: factory() for name, factory in SWEEPS.items()})

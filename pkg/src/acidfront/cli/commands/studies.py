"""Sweep, epsilon-transition and refinement commands for the acidfront CLI."""

from pathlib import Path

import typer

from ...analysis import exact_speed
from ...experiments import epsilon_transition, refinement_study, sweep
from ...files import write_epsilon_table, write_refinement_table, write_sweep_table
from .. import display
from ..session import guarded, load_config, output_root

ConfigOption = typer.Option(None, "--config", "-c", help="Run config file")
SetOption = typer.Option(None, "--set", "-s", help="Override a key: key=value")


def run_sweep(
    config_file: Path | None = ConfigOption,
    overrides: list[str] | None = SetOption,
) -> None:
    """
    Asymptotic tumour speed over a list of parameter values.

    Examples:
        acidfront sweep --set sweep=r_sweep
        acidfront sweep --set experiment=twoeq_homogeneous --set parameter=d --set values=1,2,4
    """
    with guarded():
        config = load_config(config_file, overrides, require_experiment=False)
        plan = config.to_sweep()
        display.display_info(
            f"Sweeping {plan.parameter.value} over {len(plan.values)} values on {plan.base.name}"
        )
        rows = sweep(plan)
        path = write_sweep_table(rows, plan.parameter, output_root(config) / plan.base.name)

    display.display_sweep(rows, plan.parameter)
    display.display_done(f"Table written to {path}")


def run_epsilon(
    config_file: Path | None = ConfigOption,
    overrides: list[str] | None = SetOption,
) -> None:
    """
    Epsilon-relaxed system approaching the one-equation front.

    Examples:
        acidfront epsilon
        acidfront epsilon --set values=1,0.1,0.01
    """
    with guarded():
        config = load_config(config_file, overrides, require_experiment=False)
        base = config.to_spec(default="epsilon_base")
        values = config.epsilon_values()
        display.display_info(f"Epsilon transition over {len(values)} values (d={base.params.d:g})")
        rows = epsilon_transition(values, base)
        path = write_epsilon_table(rows, output_root(config) / base.name)

    display.display_epsilon(rows, exact_speed(base.params.d))
    display.display_done(f"Table written to {path}")


def run_refine(
    config_file: Path | None = ConfigOption,
    overrides: list[str] | None = SetOption,
) -> None:
    """
    One-equation runs on finer meshes against the exact front.

    Examples:
        acidfront refine
        acidfront refine --set d=0.125 --set meshes=0.05:0.001,0.025:0.00025
    """
    with guarded():
        config = load_config(config_file, overrides, require_experiment=False)
        base = config.to_spec(default="oneeq_heterogeneous")
        d = base.params.d
        meshes = config.mesh_list()
        display.display_info(f"Refinement study over {len(meshes)} meshes (d={d:g})")
        rows = refinement_study(d, meshes, base)
        path = write_refinement_table(rows, output_root(config) / f"refinement_d{d:g}")

    display.display_refinement(rows, exact_speed(d))
    display.display_done(f"Table written to {path}")

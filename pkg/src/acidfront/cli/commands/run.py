"""Run command for the acidfront CLI."""

from pathlib import Path

import typer

from ...experiments import run as run_experiment
from ...files import write_snapshots
from ...schemes import CFL_LIMIT
from .. import display
from ..session import cfl_policy, guarded, load_config, output_root


def run(
    config_file: Path | None = typer.Option(None, "--config", "-c", help="Run config file"),
    overrides: list[str] | None = typer.Option(None, "--set", "-s", help="Override a key: key=value"),
    gnuplot: bool = typer.Option(False, "--gnuplot", help="Also write a gnuplot script"),
) -> None:
    """
    Run one experiment and write its snapshots, speed series and report.

    Examples:
        acidfront run --set experiment=oneeq_heterogeneous
        acidfront run -c twoeq.cfg --set d=0.25 --gnuplot
    """
    with guarded():
        config = load_config(config_file, overrides, require_experiment=True)
        spec = config.to_spec()
        display.display_info(f"Running {spec.name} ({spec.variant.value}, {spec.time.n_steps:,} steps)")
        result = run_experiment(spec, cfl_policy=cfl_policy(config))
        directory = output_root(config) / spec.name
        write_snapshots(result, directory, gnuplot=gnuplot)

    if result.max_cfl is not None and result.max_cfl > CFL_LIMIT:
        display.display_warning(
            f"CFL number reached {result.max_cfl:.4g} (limit {CFL_LIMIT}); "
            "the explicit one-equation update may be unstable"
        )

    display.display_result(result, directory)

"""Run-config grammar and result files."""

from .csv_writers import (
    read_snapshot,
    render_gnuplot,
    render_report,
    snapshot_name,
    write_epsilon_table,
    write_refinement_table,
    write_snapshots,
    write_sweep_table,
)
from .runconfig import RunConfig, parse_config, render_config, spec_values, with_overrides

__all__ = [
    # Run config
    "RunConfig",
    "parse_config",
    "render_config",
    "spec_values",
    "with_overrides",
    # Result files
    "read_snapshot",
    "render_gnuplot",
    "render_report",
    "snapshot_name",
    "write_epsilon_table",
    "write_refinement_table",
    "write_snapshots",
    "write_sweep_table",
]

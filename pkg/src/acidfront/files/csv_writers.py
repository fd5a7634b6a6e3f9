"""CSV, report and plotting-script output of experiment results."""

import csv
import logging
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import TextIO

import numpy as np

from ..analysis import SpeedSeries
from ..errors import IoError
from ..experiments import EpsilonRow, ExperimentResult, RefinementRow, SweepRow
from ..models import FieldState, SweepParameter, Vector, recover_healthy

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


@contextmanager
def _writing(path: Path) -> Iterator[TextIO]:
    """Open a file for writing with Unix newlines, mapping OS errors to IoError."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            yield handle
    except OSError as e:
        raise IoError(str(path), e.strerror or str(e)) from e


def _number(value: float | None) -> str:
    return "" if value is None else FLOAT_FORMAT % value


def snapshot_name(index: int, state: FieldState) -> str:
    return f"snapshot_{index:02d}_t{state.t:g}.csv"


def _write_state(path: Path, state: FieldState, centers: Vector, d: float) -> None:
    u = state.u if state.u is not None else recover_healthy(state.v, d)
    columns = [centers, u, state.v]
    header = "x,u,v"
    if state.w is not None:
        columns.append(state.w)
        header += ",w"
    with _writing(path) as handle:
        np.savetxt(handle, np.column_stack(columns), fmt=FLOAT_FORMAT, delimiter=",", header=header, comments="")


def _write_series(path: Path, series: SpeedSeries) -> None:
    with _writing(path) as handle:
        np.savetxt(
            handle,
            np.column_stack([series.times, series.speeds]).reshape(-1, 2),
            fmt=FLOAT_FORMAT,
            delimiter=",",
            header="t,s",
            comments="",
        )


def render_report(result: ExperimentResult) -> str:
    """Plain-text summary: speed with tail spread, front shape, errors."""
    spec = result.spec
    params = spec.params
    lines = [
        f"experiment = {spec.name}",
        f"variant = {params.variant.value}",
        f"d = {params.d!r}",
        f"r = {params.r!r}",
    ]
    for name in ("D", "c", "epsilon"):
        value = getattr(params, name)
        if value is not None:
            lines.append(f"{name} = {value!r}")
    lines += [
        f"cells = {spec.grid.n_cells}",
        f"dx = {spec.grid.dx!r}",
        f"dt = {spec.time.dt!r}",
        f"t_final = {spec.time.t_final!r}",
        f"steps = {result.steps}",
    ]
    if result.max_cfl is not None:
        lines.append(f"max_cfl = {_number(result.max_cfl)}")
    if result.asymptotic_speed is not None:
        lines.append(f"asymptotic_speed = {_number(result.asymptotic_speed)}")
        lines.append(f"speed_spread = {_number(result.speed_spread)}")
        lines.append(f"speed = {result.asymptotic_speed:.6f} +/- {result.speed_spread or 0.0:.2e}")
    if result.healthy_asymptotic_speed is not None:
        lines.append(f"healthy_asymptotic_speed = {_number(result.healthy_asymptotic_speed)}")
    if result.shape is not None:
        lines += [
            f"front_label = {result.shape.label.value}",
            f"edge_position = {_number(result.shape.edge_position)}",
            f"tail_length = {_number(result.shape.tail_length)}",
            f"edge_slope = {_number(result.shape.edge_slope)}",
        ]
    if result.exact is not None:
        lines += [
            f"exact_alignment = {result.exact.alignment.value}",
            f"exact_l_inf = {_number(result.exact.l_inf)}",
            f"exact_l2 = {_number(result.exact.l2)}",
            f"exact_phase_offset = {_number(result.exact.phase_offset)}",
        ]
    if result.gap is not None:
        lines += [
            f"gap_cells = {result.gap.cells}",
            f"gap_start = {_number(result.gap.start)}",
            f"gap_end = {_number(result.gap.end)}",
        ]
    return "\n".join(lines) + "\n"


def render_gnuplot(result: ExperimentResult, snapshot_files: Sequence[str]) -> str:
    """Companion gnuplot script plotting the snapshots and the speed series."""
    has_w = result.final.w is not None
    lines = [
        f"# {result.spec.name}: gnuplot plot.gp",
        "set datafile separator ','",
        "set key autotitle columnhead",
        "set terminal pngcairo size 1000,600",
        "",
        "set output 'profiles.png'",
        "set xlabel 'x'",
        "set ylabel 'density'",
    ]
    plots = []
    for name in snapshot_files:
        plots.append(f"'{name}' using 1:3 with lines title '{name} v'")
        plots.append(f"'{name}' using 1:2 with lines dashtype 2 title '{name} u'")
        if has_w:
            plots.append(f"'{name}' using 1:4 with lines dashtype 3 title '{name} w'")
    if plots:
        lines.append("plot " + ", \\\n     ".join(plots))
    if result.speed is not None:
        lines += [
            "",
            "set output 'speed.png'",
            "set xlabel 't'",
            "set ylabel 's'",
            "plot 'speed_series.csv' using 1:2 with lines title 'tumour front'",
        ]
    if result.exact is not None:
        lines += [
            "",
            "set output 'exact.png'",
            "set xlabel 'x'",
            "set ylabel 'v'",
            "plot 'exact_vs_numeric.csv' using 1:2 with lines title 'numeric', \\",
            "     'exact_vs_numeric.csv' using 1:3 with lines dashtype 2 title 'exact'",
        ]
    return "\n".join(lines) + "\n"


def write_snapshots(result: ExperimentResult, directory: Path, *, gnuplot: bool = False) -> list[Path]:
    """
    Write every output file of one run into `directory`.

    One CSV per snapshot (header ``x,u,v[,w]``, 17 significant digits), the
    speed series, ``report.txt``, ``exact_vs_numeric.csv`` when an exact
    comparison was made and optionally ``plot.gp``.

    Args:
        result: Finished experiment
        directory: Output directory, created if missing
        gnuplot: Also write the plotting script

    Returns:
        Paths written, in write order

    Raises:
        IoError: If a file cannot be written
    """
    grid = result.spec.grid
    d = result.spec.params.d
    centers = grid.centers
    written: list[Path] = []

    snapshot_files = []
    for index, state in enumerate(result.snapshots):
        path = directory / snapshot_name(index, state)
        _write_state(path, state, centers, d)
        snapshot_files.append(path.name)
        written.append(path)

    if result.speed is not None:
        path = directory / "speed_series.csv"
        _write_series(path, result.speed)
        written.append(path)
    if result.healthy_speed is not None:
        path = directory / "healthy_speed_series.csv"
        _write_series(path, result.healthy_speed)
        written.append(path)

    if result.exact is not None:
        path = directory / "exact_vs_numeric.csv"
        v = result.final.v
        table = np.column_stack([centers, v, result.exact.reference, np.abs(v - result.exact.reference)])
        with _writing(path) as handle:
            np.savetxt(handle, table, fmt=FLOAT_FORMAT, delimiter=",", header="x,v_num,v_exact,abs_err", comments="")
        written.append(path)

    path = directory / "report.txt"
    with _writing(path) as handle:
        handle.write(render_report(result))
    written.append(path)

    if gnuplot:
        path = directory / "plot.gp"
        with _writing(path) as handle:
            handle.write(render_gnuplot(result, snapshot_files))
        written.append(path)

    logger.info(f"Wrote {len(written)} files to {directory}")
    return written


def _write_table(path: Path, header: Sequence[str], rows: Sequence[Sequence[str]]) -> Path:
    with _writing(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def write_sweep_table(rows: Sequence[SweepRow], parameter: SweepParameter, directory: Path) -> Path:
    """``sweep_<parameter>.csv`` with value, speed, spread and error columns."""
    return _write_table(
        directory / f"sweep_{parameter.value}.csv",
        [parameter.value, "speed", "spread", "error"],
        [[_number(r.value), _number(r.speed), _number(r.spread), r.error or ""] for r in rows],
    )


def write_epsilon_table(rows: Sequence[EpsilonRow], directory: Path) -> Path:
    """``epsilon_transition.csv`` with epsilon, speed, l_inf and error columns."""
    return _write_table(
        directory / "epsilon_transition.csv",
        ["epsilon", "speed", "l_inf", "error"],
        [[_number(r.epsilon), _number(r.speed), _number(r.l_inf), r.error or ""] for r in rows],
    )


def write_refinement_table(rows: Sequence[RefinementRow], directory: Path) -> Path:
    """``refinement.csv`` with dx, dt, speed, l_inf and error columns."""
    return _write_table(
        directory / "refinement.csv",
        ["dx", "dt", "speed", "l_inf", "error"],
        [[_number(r.dx), _number(r.dt), _number(r.speed), _number(r.l_inf), r.error or ""] for r in rows],
    )


def read_snapshot(path: Path) -> dict[str, Vector]:
    """Load a snapshot CSV back into named columns."""
    table = np.genfromtxt(path, delimiter=",", names=True, dtype=np.float64)
    return {name: np.asarray(table[name], dtype=np.float64) for name in table.dtype.names or ()}

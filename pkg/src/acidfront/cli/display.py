"""Display utilities for the acidfront CLI with Rich formatting."""

from collections.abc import Sequence
from pathlib import Path

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..experiments import EpsilonRow, ExperimentResult, ExperimentSpec, RefinementRow, SweepRow, SweepSpec
from ..models import FrontLabel, SweepParameter

console = Console()
# Machine-parsable error lines; no markup, no wrapping
err_console = Console(stderr=True, markup=False, highlight=False, soft_wrap=True)

LABEL_STYLES = {
    FrontLabel.SHARP: "bold green",
    FrontLabel.SMOOTH: "bold cyan",
    FrontLabel.INDETERMINATE: "yellow",
}


def _fmt(value: float | None, spec: str = ".6f") -> str:
    return "-" if value is None else format(value, spec)


def display_error(message: str) -> None:
    """Display error message."""
    console.print(f"[red]✗[/red] {message}")


def display_warning(message: str) -> None:
    """Display warning message."""
    console.print(f"[yellow]![/yellow] {message}")


def display_info(message: str) -> None:
    """Display info message."""
    console.print(f"[dim]ℹ[/dim] {message}")


def display_done(message: str) -> None:
    """Display completion message."""
    console.print(f"[green]✓[/green] {message}")


def failure_line(error_class: str, message: str) -> None:
    """Emit ``error=<Class> message="..."`` on standard error."""
    flat = " ".join(message.split()).replace("\\", "\\\\").replace('"', '\\"')
    err_console.print(f'error={error_class} message="{flat}"')


def display_result(result: ExperimentResult, directory: Path | None = None) -> None:
    """Display the metrics of one run."""
    spec = result.spec
    table = Table(title=f"Experiment {spec.name}", show_header=True, border_style="cyan")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green", justify="right")

    table.add_row("Variant", spec.variant.value)
    table.add_row("Cells / steps", f"{spec.grid.n_cells:,} / {result.steps:,}")
    if result.asymptotic_speed is not None:
        table.add_row("Tumour speed", f"{result.asymptotic_speed:.6f} ± {_fmt(result.speed_spread, '.1e')}")
    if result.healthy_asymptotic_speed is not None:
        table.add_row("Healthy speed", f"{result.healthy_asymptotic_speed:.6f}")
    if result.shape is not None:
        style = LABEL_STYLES[result.shape.label]
        table.add_row("Front", f"[{style}]{result.shape.label.value}[/{style}]")
        table.add_row("Tail length", f"{result.shape.tail_length:.4g}")
    if result.exact is not None:
        table.add_row("L∞ vs exact", f"{result.exact.l_inf:.3e}")
        table.add_row("Phase offset", f"{result.exact.phase_offset:+.4f}")
    if result.gap is not None:
        table.add_row("Interstitial gap", f"{result.gap.cells} cells")
    if result.max_cfl is not None:
        table.add_row("Max CFL", f"{result.max_cfl:.3f}")

    console.print(table)
    if directory is not None:
        display_done(f"Results written to {directory}")


def display_sweep(rows: Sequence[SweepRow], parameter: SweepParameter) -> None:
    """Display asymptotic speed per sweep value."""
    table = Table(title=f"Sweep over {parameter.value}", show_header=True, border_style="cyan")
    table.add_column(parameter.value, style="cyan", justify="right")
    table.add_column("Speed", style="green", justify="right")
    table.add_column("Spread", justify="right")
    table.add_column("Error", style="red")
    for row in rows:
        table.add_row(f"{row.value:g}", _fmt(row.speed), _fmt(row.spread, ".1e"), row.error or "")
    console.print(table)


def display_epsilon(rows: Sequence[EpsilonRow], exact_speed: float) -> None:
    """Display the epsilon-transition table."""
    table = Table(title="Epsilon transition", show_header=True, border_style="cyan")
    table.add_column("ε", style="cyan", justify="right")
    table.add_column("Speed", style="green", justify="right")
    table.add_column("|s - s*|", justify="right")
    table.add_column("L∞ vs exact", justify="right", style="yellow")
    table.add_column("Error", style="red")
    for row in rows:
        table.add_row(
            f"{row.epsilon:g}",
            _fmt(row.speed),
            _fmt(None if row.speed is None else abs(row.speed - exact_speed), ".2e"),
            _fmt(row.l_inf, ".3e"),
            row.error or "",
        )
    console.print(table)


def display_refinement(rows: Sequence[RefinementRow], exact_speed: float) -> None:
    """Display the mesh-refinement table."""
    table = Table(title="Mesh refinement", show_header=True, border_style="cyan")
    table.add_column("dx", style="cyan", justify="right")
    table.add_column("dt", style="cyan", justify="right")
    table.add_column("Speed", style="green", justify="right")
    table.add_column("|s - s*|", justify="right")
    table.add_column("L∞ vs exact", justify="right", style="yellow")
    table.add_column("Error", style="red")
    for row in rows:
        table.add_row(
            f"{row.dx:g}",
            f"{row.dt:g}",
            _fmt(row.speed),
            _fmt(None if row.speed is None else abs(row.speed - exact_speed), ".2e"),
            _fmt(row.l_inf, ".3e"),
            row.error or "",
        )
    console.print(table)


def display_experiments(experiments: Sequence[ExperimentSpec], sweeps: dict[str, SweepSpec]) -> None:
    """Display the builtin experiments and sweeps."""
    table = Table(title="Builtin experiments", show_header=True, border_style="cyan")
    table.add_column("Name", style="cyan")
    table.add_column("Variant")
    table.add_column("d", justify="right")
    table.add_column("dx / dt", justify="right")
    table.add_column("T", justify="right")
    table.add_column("Provenance", style="dim")
    for spec in experiments:
        table.add_row(
            spec.name,
            spec.variant.value,
            f"{spec.params.d:g}",
            f"{spec.grid.dx:g} / {spec.time.dt:g}",
            f"{spec.time.t_final:g}",
            spec.provenance,
        )
    console.print(table)

    lines = [
        f"[cyan]{name}[/cyan]: {sweep.parameter.value} ∈ {{{', '.join(f'{v:g}' for v in sweep.values)}}}"
        f" on {sweep.base.variant.value}"
        for name, sweep in sweeps.items()
    ]
    console.print(Panel("\n".join(lines), title="[bold cyan]Builtin sweeps[/bold cyan]", border_style="cyan"))

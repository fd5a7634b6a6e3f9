"""Time loop driving a stepper from t = 0 to t_final."""

import logging
from collections.abc import Sequence
from typing import Protocol

from pydantic import BaseModel, ConfigDict, Field

from ..errors import AcidFrontError
from ..models import CflPolicy, FieldState, Grid1D, ModelParams, ModelVariant, TimeControl
from .steppers import CFL_LIMIT, stepper_for

logger = logging.getLogger(__name__)


class StepObserver(Protocol):
    """Receives every consecutive pair of states produced by evolve."""

    def __call__(self, previous: FieldState, current: FieldState) -> None: ...


class Evolution(BaseModel):
    """Snapshots and bookkeeping of one evolution."""

    model_config = ConfigDict(frozen=True)

    snapshots: list[FieldState] = Field(description="States at the requested snapshot times")
    final: FieldState = Field(description="State at t_final")
    steps: int = Field(description="Number of steps taken", ge=0)
    max_cfl: float | None = Field(
        default=None,
        description="Largest CFL number seen (explicit schemes only)",
    )


def evolve(
    state: FieldState,
    params: ModelParams,
    grid: Grid1D,
    time: TimeControl,
    observers: Sequence[StepObserver] = (),
    cfl_policy: CflPolicy = CflPolicy.WARN,
) -> Evolution:
    """
    Advance `state` with the stepper of `params.variant` up to time.t_final.

    Snapshots are recorded at time.snapshot_times (the initial state when 0
    is requested). Step times are computed as k * dt, not accumulated; when dt
    does not divide t_final the last step is shortened to end on t_final.

    Args:
        state: Initial state
        params: Model parameters; the variant selects the stepper
        grid: Mesh
        time: Step size, horizon and snapshot times
        observers: Called with (previous, current) after every step
        cfl_policy: Passed to the explicit stepper

    Returns:
        Evolution with the snapshots and the final state

    Raises:
        AcidFrontError: Any stepper error, with the failing step index noted
    """
    stepper = stepper_for(params.variant)
    extra = {"cfl_policy": cfl_policy} if params.variant is ModelVariant.ONE_EQ else {}

    wanted = set(time.snapshot_steps)
    snapshots: list[FieldState] = [state] if 0 in wanted else []
    max_cfl: float | None = None
    warned = False

    current = state
    n_steps = time.n_steps
    logger.debug(f"Evolving {params.variant.value}: {n_steps} steps on {grid.n_cells} cells")

    for k in range(1, n_steps + 1):
        try:
            stepped, report = stepper(current, params, grid, time.step_size(k), **extra)
        except AcidFrontError as e:
            e.add_note(f"failing step {k} of {n_steps} (t={current.t:.6g})")
            raise

        nxt = stepped.model_copy(update={"t": time.time_at(k)})
        for observer in observers:
            observer(current, nxt)

        if report.cfl_number is not None:
            max_cfl = report.cfl_number if max_cfl is None else max(max_cfl, report.cfl_number)
            if report.cfl_number > CFL_LIMIT and not warned:
                logger.warning(
                    f"CFL number {report.cfl_number:.4g} exceeds {CFL_LIMIT} at step {k}; "
                    "continuing under policy warn"
                )
                warned = True

        if k in wanted:
            snapshots.append(nxt)
        current = nxt

    return Evolution(snapshots=snapshots, final=current, steps=n_steps, max_cfl=max_cfl)

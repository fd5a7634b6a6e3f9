"""Uniform cell-centred mesh and time control."""

import math

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from ..errors import InvalidDomain, InvalidSpec, NonIntegerCellCount

CELL_COUNT_TOLERANCE = 1e-9
SNAPSHOT_TOLERANCE = 1e-12


class Grid1D(BaseModel):
    """
    Uniform cell-centred 1D mesh on [x_left, x_right].

    Cell i (0-based) spans [x_left + i*dx, x_left + (i+1)*dx); dx is derived
    from the extent and the cell count so it can never disagree with them.
    """

    model_config = ConfigDict(frozen=True)

    x_left: float = Field(description="Domain left endpoint")
    x_right: float = Field(description="Domain right endpoint")
    n_cells: int = Field(description="Number of finite volumes", gt=0)

    @model_validator(mode="after")
    def check_extent(self) -> "Grid1D":
        if self.x_left >= self.x_right:
            raise InvalidDomain(f"x_left ({self.x_left}) must be < x_right ({self.x_right})")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def dx(self) -> float:
        """Cell width."""
        return self.length / self.n_cells

    @property
    def centers(self) -> NDArray[np.float64]:
        """Cell centres x_left + (i + 1/2) dx."""
        return self.x_left + (np.arange(self.n_cells, dtype=np.float64) + 0.5) * self.dx

    @property
    def length(self) -> float:
        """Extent x_right - x_left."""
        return self.x_right - self.x_left

    def index_of(self, x: float) -> int:
        """Index of the first cell whose centre is >= x."""
        return int(np.searchsorted(self.centers, x, side="left"))


def make_grid(x_left: float, x_right: float, dx: float) -> Grid1D:
    """
    Build a uniform grid from its extent and cell width.

    Args:
        x_left: Domain left endpoint
        x_right: Domain right endpoint
        dx: Requested cell width

    Returns:
        Grid with n_cells = round((x_right - x_left) / dx)

    Raises:
        InvalidDomain: If x_left >= x_right or dx <= 0
        NonIntegerCellCount: If the extent is not a whole number of cells
    """
    if x_left >= x_right:
        raise InvalidDomain(f"x_left ({x_left}) must be < x_right ({x_right})")
    if dx <= 0:
        raise InvalidDomain(f"dx must be positive, got {dx}")

    ratio = (x_right - x_left) / dx
    n_cells = round(ratio)
    if n_cells < 1 or abs(ratio - n_cells) > CELL_COUNT_TOLERANCE * max(1.0, ratio):
        raise NonIntegerCellCount(
            f"(x_right - x_left) / dx = {ratio!r} is not an integer cell count"
        )
    return Grid1D(x_left=x_left, x_right=x_right, n_cells=n_cells)


def _steps_for(t: float, dt: float) -> int | None:
    """Step index k with k*dt == t within tolerance, or None."""
    k = round(t / dt)
    if abs(k * dt - t) <= SNAPSHOT_TOLERANCE * max(abs(t), dt):
        return k
    return None


class TimeControl(BaseModel):
    """
    Fixed time step, horizon and the instants at which snapshots are kept.

    When dt does not divide t_final the last step is shortened so the run
    ends exactly at t_final; t_final is then the only snapshot time that is
    not a multiple of dt.
    """

    model_config = ConfigDict(frozen=True)

    dt: float = Field(description="Time step", gt=0)
    t_final: float = Field(description="Final time T", ge=0)
    snapshot_times: tuple[float, ...] = Field(
        default=(),
        description="Ordered snapshot instants in [0, t_final]",
    )

    @model_validator(mode="after")
    def check_alignment(self) -> "TimeControl":
        previous = -np.inf
        for t in self.snapshot_times:
            if t < 0 or t > self.t_final * (1 + SNAPSHOT_TOLERANCE):
                raise InvalidSpec(f"snapshot time {t} outside [0, {self.t_final}]")
            if t <= previous:
                raise InvalidSpec("snapshot times must be strictly increasing")
            if _steps_for(t, self.dt) is None and not self._is_final(t):
                raise InvalidSpec(f"snapshot time {t} is not a multiple of dt={self.dt}")
            previous = t
        return self

    def _is_final(self, t: float) -> bool:
        return abs(t - self.t_final) <= SNAPSHOT_TOLERANCE * max(self.t_final, self.dt)

    @property
    def aligned(self) -> bool:
        """True when t_final is a whole number of steps."""
        return _steps_for(self.t_final, self.dt) is not None

    @property
    def n_steps(self) -> int:
        steps = _steps_for(self.t_final, self.dt)
        return steps if steps is not None else math.ceil(self.t_final / self.dt)

    def time_at(self, k: int) -> float:
        """Time after k steps; the last step of an unaligned horizon ends at t_final."""
        if k >= self.n_steps and not self.aligned:
            return self.t_final
        return k * self.dt

    def step_size(self, k: int) -> float:
        """Length of step k (1-based)."""
        if k == self.n_steps and not self.aligned:
            return self.t_final - (k - 1) * self.dt
        return self.dt

    @property
    def snapshot_steps(self) -> tuple[int, ...]:
        """Step indices matching snapshot_times."""
        return tuple(
            self.n_steps if self._is_final(t) and not self.aligned else round(t / self.dt)
            for t in self.snapshot_times
        )

    @classmethod
    def evenly(cls, dt: float, t_final: float, count: int) -> "TimeControl":
        """Time control with `count` snapshots spread evenly over [0, t_final]."""
        if count < 1:
            raise InvalidSpec("snapshot count must be at least 1")
        unsnapped = cls(dt=dt, t_final=t_final)
        steps = unsnapped.n_steps
        if count == 1 or steps == 0:
            indices = [steps]
        else:
            indices = sorted({round(k * steps / (count - 1)) for k in range(count)})
        return cls(dt=dt, t_final=t_final, snapshot_times=tuple(unsnapped.time_at(k) for k in indices))

"""Per-cell field values at one time level and initial-data construction."""

from collections.abc import Sequence
from typing import Any, TypeAlias

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import JumpOutsideDomain, LengthMismatch
from .enums import ModelVariant
from .equilibria import invaded_state
from .grid import Grid1D

Vector = NDArray[np.float64]
# pydantic validates arrays by isinstance against the bare class
Array: TypeAlias = np.ndarray  # type: ignore[type-arg]

DENSITY_TOLERANCE = 1e-10


def _frozen_copy(values: Vector) -> Vector:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


class FieldState(BaseModel):
    """
    Healthy (u), tumour (v) and acid (w) densities at time t.

    u is absent for the one-equation model (recover it with
    `recover_healthy`), w is present only for the full model. Arrays are
    copied on construction and made read-only.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t: float = Field(default=0.0, description="Current time")
    v: Array = Field(description="Tumour density per cell")
    u: Array | None = Field(default=None, description="Healthy density per cell")
    w: Array | None = Field(default=None, description="Excess lactic acid per cell")

    @model_validator(mode="before")
    @classmethod
    def freeze_arrays(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        for name in ("u", "v", "w"):
            value = data.get(name)
            if value is not None:
                data[name] = _frozen_copy(np.asarray(value))
        return data

    @model_validator(mode="after")
    def check_lengths(self) -> "FieldState":
        n = self.v.shape[0]
        for name, field in (("u", self.u), ("w", self.w)):
            if field is not None and field.shape != (n,):
                raise LengthMismatch(f"{name} has shape {field.shape}, expected ({n},)")
        return self

    @property
    def n_cells(self) -> int:
        return int(self.v.shape[0])

    def fields(self) -> dict[str, Vector]:
        """Stored fields by name, in u, v, w order."""
        return {
            name: field
            for name, field in (("u", self.u), ("v", self.v), ("w", self.w))
            if field is not None
        }

    def is_finite(self) -> bool:
        return all(bool(np.isfinite(field).all()) for field in self.fields().values())

    def within_bounds(self, tol: float = DENSITY_TOLERANCE) -> bool:
        """Whether the densities u and v stay in [-tol, 1 + tol]."""
        densities = [f for name, f in self.fields().items() if name in ("u", "v")]
        return all(bool(((f >= -tol) & (f <= 1.0 + tol)).all()) for f in densities)


def riemann_initial(
    grid: Grid1D,
    left_state: Sequence[float],
    right_state: Sequence[float],
    x_jump: float,
) -> FieldState:
    """
    Piecewise-constant data with a single jump at x_jump.

    State tuples are (v,) for the one-equation model, (u, v) for the
    two-equation and epsilon systems and (u, v, w) for the full model.
    Cells whose centre lies left of x_jump take left_state, the others
    take right_state.

    Args:
        grid: Mesh
        left_state: Field values behind the front
        right_state: Field values ahead of the front
        x_jump: Jump position, strictly inside the domain

    Returns:
        State at t = 0

    Raises:
        JumpOutsideDomain: If x_jump is not inside (x_left, x_right)
        LengthMismatch: If the two tuples differ in length or have an
            unsupported field count
    """
    if not grid.x_left < x_jump < grid.x_right:
        raise JumpOutsideDomain(f"x_jump={x_jump} not inside ({grid.x_left}, {grid.x_right})")
    if len(left_state) != len(right_state) or len(left_state) not in (1, 2, 3):
        raise LengthMismatch(
            f"state tuples must both have 1, 2 or 3 entries, got {len(left_state)} and {len(right_state)}"
        )

    behind = grid.centers < x_jump
    columns = [
        np.where(behind, left, right) for left, right in zip(left_state, right_state, strict=True)
    ]

    if len(columns) == 1:
        return FieldState(t=0.0, v=columns[0])
    if len(columns) == 2:
        return FieldState(t=0.0, u=columns[0], v=columns[1])
    return FieldState(t=0.0, u=columns[0], v=columns[1], w=columns[2])


def riemann_states(
    variant: ModelVariant, d: float
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """
    Default (left, right) Riemann states for a variant.

    The invaded state ((1 - d)^+, 1) sits behind the front and the healthy
    state (1, 0) ahead of it; the full model adds w = v on both sides, which
    zeroes every reaction term.
    """
    u_behind, v_behind = invaded_state(d)
    if variant is ModelVariant.ONE_EQ:
        return (v_behind,), (0.0,)
    if variant is ModelVariant.FULL_MODEL:
        return (u_behind, v_behind, v_behind), (1.0, 0.0, 0.0)
    return (u_behind, v_behind), (1.0, 0.0)


def recover_healthy(v: Vector, d: float) -> Vector:
    """
    Healthy density slaved to the tumour density: u = max(1 - d v, 0).

    Args:
        v: Tumour density per cell
        d: Death rate

    Returns:
        Healthy density per cell
    """
    return np.maximum(1.0 - d * np.asarray(v, dtype=np.float64), 0.0)

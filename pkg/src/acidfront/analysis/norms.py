"""Error norms and comparison against the exact front."""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import LengthMismatch
from ..models import Array, ExactAlignment, FieldState, Grid1D, Vector
from .exact import exact_profile, exact_speed, half_level_offset
from .shape import crossing_position


def error_norms(numeric: Vector, reference: Vector, dx: float) -> tuple[float, float]:
    """
    Discrete L-infinity and L2 distances.

    Args:
        numeric: Computed values per cell
        reference: Reference values per cell
        dx: Cell width

    Returns:
        (max |diff|, sqrt(sum diff^2 dx))

    Raises:
        LengthMismatch: If the vectors differ in length
    """
    if numeric.shape != reference.shape:
        raise LengthMismatch(f"numeric has shape {numeric.shape}, reference has shape {reference.shape}")
    diff = np.asarray(numeric, dtype=np.float64) - np.asarray(reference, dtype=np.float64)
    if diff.size == 0:
        return 0.0, 0.0
    return float(np.max(np.abs(diff))), math.sqrt(float(np.sum(diff**2)) * dx)


class ExactComparison(BaseModel):
    """A numerical tumour profile against the exact front at the same time."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t: float
    alignment: ExactAlignment
    reference: Array = Field(description="Exact profile per cell")
    l_inf: float = Field(ge=0)
    l2: float = Field(ge=0)
    phase_offset: float = Field(
        description="Edge position of the aligned exact front minus the jump-anchored one"
    )


def compare_with_exact(
    state: FieldState,
    grid: Grid1D,
    d: float,
    x_jump: float,
    alignment: ExactAlignment = ExactAlignment.CROSSING,
) -> ExactComparison:
    """
    Compare v with the exact front at state.t.

    With CROSSING alignment the exact front is shifted so both profiles cross
    v = 1/2 at the same x, measuring the shape error only. With ANCHORED the
    exact edge starts at x_jump at t = 0. The phase offset between the two
    placements is reported either way.

    Raises:
        NonPositiveD: If d <= 0
        FrontNotFound: If v has no 1/2 crossing
    """
    s = exact_speed(d)
    x_half = crossing_position(state.v, grid.centers, 0.5)
    aligned_origin = x_half + half_level_offset(d) - s * state.t
    phase_offset = aligned_origin - x_jump

    origin = aligned_origin if alignment is ExactAlignment.CROSSING else x_jump
    reference = exact_profile(grid.centers, state.t, d, origin=origin)
    l_inf, l2 = error_norms(state.v, reference, grid.dx)
    return ExactComparison(
        t=state.t,
        alignment=alignment,
        reference=reference,
        l_inf=l_inf,
        l2=l2,
        phase_offset=phase_offset,
    )

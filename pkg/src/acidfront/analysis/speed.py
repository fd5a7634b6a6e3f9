"""Space-averaged wave-speed estimation."""

import logging
import math

import numpy as np
from pydantic import BaseModel, Field, field_validator

from ..errors import EmptySeries, InvalidSpec, LengthMismatch, NegativeParameter, ZeroJump
from ..models import FieldState, Vector, invaded_state

logger = logging.getLogger(__name__)

DEFAULT_TAIL_FRACTION = 0.25
SHORT_STEP_TOLERANCE = 1e-9


def front_jump(field: str, d: float) -> float:
    """
    [phi] = phi(+inf) - phi(-inf) for the Riemann fronts.

    The tumour front goes from 1 to 0, so [phi] = -1. The healthy front goes
    from (1 - d)^+ behind to 1 ahead, so [phi] = 1 - (1 - d)^+.
    """
    if field == "v":
        return -1.0
    if field == "u":
        return 1.0 - invaded_state(d)[0]
    raise InvalidSpec(f"no front jump defined for field {field!r}")


def speed_estimate_step(
    v_n: Vector, v_np1: Vector, dx: float, dt: float, phi_jump: float
) -> float:
    """
    Speed over one step: s^n = dx / ([phi] dt) * sum_i (v_i^n - v_i^{n+1}).

    Args:
        v_n: Field at time level n
        v_np1: Field at time level n+1
        dx: Cell width
        dt: Time step
        phi_jump: [phi] of the tracked front

    Returns:
        Speed estimate (positive for a rightward-moving front)

    Raises:
        ZeroJump: If phi_jump is zero
        LengthMismatch: If the two fields differ in length
    """
    if phi_jump == 0:
        raise ZeroJump("[phi] must be non-zero")
    if v_n.shape != v_np1.shape:
        raise LengthMismatch(f"v_n has shape {v_n.shape}, v_np1 has shape {v_np1.shape}")
    return float(dx / (phi_jump * dt) * np.sum(v_n - v_np1))


class SpeedSeries(BaseModel):
    """Per-step speed estimates s^n of one front."""

    phi_jump: float = Field(description="[phi] = phi(+inf) - phi(-inf)")
    times: list[float] = Field(default_factory=list, description="t^{n+1} of each estimate")
    speeds: list[float] = Field(default_factory=list, description="s^n")

    @field_validator("phi_jump")
    @classmethod
    def check_jump(cls, v: float) -> float:
        if v == 0:
            raise ZeroJump("[phi] must be non-zero")
        return v

    @property
    def values(self) -> list[tuple[float, float]]:
        """(t, s) pairs in time order."""
        return list(zip(self.times, self.speeds, strict=True))

    def __len__(self) -> int:
        return len(self.speeds)

    def append(self, t: float, s: float) -> None:
        if self.times and t <= self.times[-1]:
            raise InvalidSpec(f"speed series times must increase, got {t} after {self.times[-1]}")
        self.times.append(t)
        self.speeds.append(s)


def _tail(series: SpeedSeries, tail_fraction: float) -> Vector:
    if not 0 < tail_fraction <= 1:
        raise InvalidSpec(f"tail_fraction must be in (0, 1], got {tail_fraction}")
    if len(series) == 0:
        raise EmptySeries("speed series has no samples")
    count = max(1, math.ceil(tail_fraction * len(series)))
    return np.asarray(series.speeds[-count:], dtype=np.float64)


def asymptotic_speed(series: SpeedSeries, tail_fraction: float = DEFAULT_TAIL_FRACTION) -> float:
    """
    Mean speed over the last `tail_fraction` of the recorded steps.

    Raises:
        EmptySeries: If the series has no samples
    """
    return float(np.mean(_tail(series, tail_fraction)))


def asymptotic_speed_with_spread(
    series: SpeedSeries, tail_fraction: float = DEFAULT_TAIL_FRACTION
) -> tuple[float, float]:
    """Tail mean together with the tail's peak-to-peak spread."""
    tail = _tail(series, tail_fraction)
    return float(np.mean(tail)), float(np.ptp(tail))


def rescale_speed(s: float, D: float) -> float:
    """
    Convert a speed of the rescaled reductions to full-model units.

    The reductions measure space in units of sqrt(D), so s_full = s * sqrt(D).
    """
    if D < 0:
        raise NegativeParameter(f"D must be >= 0, got {D}")
    return s * math.sqrt(D)


class SpeedEstimator:
    """
    Step observer accumulating a SpeedSeries for one field.

    Example:
        estimator = SpeedEstimator("v", dx=grid.dx, dt=time.dt, phi_jump=-1.0)
        evolve(state, params, grid, time, observers=[estimator])
        s = asymptotic_speed(estimator.series)
    """

    def __init__(self, field: str, dx: float, dt: float, phi_jump: float) -> None:
        self.field = field
        self.dx = dx
        self.dt = dt
        self.series = SpeedSeries(phi_jump=phi_jump)

    def __call__(self, previous: FieldState, current: FieldState) -> None:
        before = previous.fields().get(self.field)
        after = current.fields().get(self.field)
        if before is None or after is None:
            raise InvalidSpec(f"state has no field {self.field!r} to track")
        # A shortened final step is measured from the state times
        step = current.t - previous.t
        dt = step if 0 < step < self.dt * (1 - SHORT_STEP_TOLERANCE) else self.dt
        s = speed_estimate_step(before, after, self.dx, dt, self.series.phi_jump)
        self.series.append(current.t, s)

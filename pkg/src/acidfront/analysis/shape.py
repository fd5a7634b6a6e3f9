"""
Sharp/smooth classification of tumour fronts.

A sharp front reaches zero at a finite edge, so the distance between its
eps_high and eps_low level crossings stays within a few cells. A smooth
front decays exponentially and the same distance grows like
log(eps_high / eps_low) times its decay length.
"""

import logging
from collections.abc import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.ndimage import median_filter

from ..errors import BoundaryContamination, FrontNotFound, InvalidSpec
from ..models import FieldState, FrontLabel, Grid1D, Vector

logger = logging.getLogger(__name__)

DEFAULT_EPS_HIGH = 0.1
DEFAULT_EPS_LOW = 1e-4
DEFAULT_K_SHARP = 10.0
SMOOTH_FACTOR = 4.0
BOUNDARY_BUFFER_CELLS = 5
MONOTONE_TOLERANCE = 1e-12


class ShapeThresholds(BaseModel):
    """Level and length thresholds of the front classifier."""

    model_config = ConfigDict(frozen=True)

    eps_high: float = Field(default=DEFAULT_EPS_HIGH, description="Upper crossing level", gt=0, lt=1)
    eps_low: float = Field(default=DEFAULT_EPS_LOW, description="Lower crossing level", gt=0)
    k_sharp: float = Field(
        default=DEFAULT_K_SHARP,
        description="Sharp if the tail is at most k_sharp cells long",
        gt=0,
    )

    @model_validator(mode="after")
    def check_order(self) -> "ShapeThresholds":
        if self.eps_low >= self.eps_high:
            raise InvalidSpec(f"eps_low ({self.eps_low}) must be < eps_high ({self.eps_high})")
        return self


class FrontShapeReport(BaseModel):
    """Classifier verdict for a sequence of snapshots."""

    model_config = ConfigDict(frozen=True)

    label: FrontLabel
    edge_position: float = Field(description="x where v first falls below eps_low (last snapshot)")
    tail_length: float = Field(description="Median distance between the eps_high and eps_low crossings", ge=0)
    edge_slope: float = Field(description="One-sided slope of v just behind the edge (last snapshot)")


def crossing_position(v: Vector, centers: Vector, level: float) -> float:
    """
    Rightmost x where v falls through `level`, linearly interpolated.

    Raises:
        FrontNotFound: If v never drops from >= level to < level
    """
    above = v >= level
    drops = np.flatnonzero(above[:-1] & ~above[1:])
    if drops.size == 0:
        raise FrontNotFound(f"no crossing of level {level:g}")
    i = int(drops[-1])
    fraction = (v[i] - level) / (v[i] - v[i + 1])
    return float(centers[i] + fraction * (centers[i + 1] - centers[i]))


def _smoothed(v: Vector) -> Vector:
    result: Vector = median_filter(np.asarray(v, dtype=np.float64), size=3, mode="nearest")
    return result


def _is_monotone_front(v: Vector, centers: Vector, x_high: float, x_low: float) -> bool:
    lo = max(int(np.searchsorted(centers, x_high)) - 1, 0)
    hi = min(int(np.searchsorted(centers, x_low)) + 1, v.shape[0])
    return bool(np.all(np.diff(v[lo:hi]) <= MONOTONE_TOLERANCE))


def _edge_slope(v: Vector, level: float, dx: float) -> float:
    behind = np.flatnonzero(v >= level)
    j = int(behind[-1]) if behind.size else 0
    if j == 0:
        return 0.0
    return float((v[j] - v[j - 1]) / dx)


def classify_front(
    snapshots: Sequence[FieldState],
    grid: Grid1D,
    eps_high: float = DEFAULT_EPS_HIGH,
    eps_low: float = DEFAULT_EPS_LOW,
    k_sharp: float = DEFAULT_K_SHARP,
    *,
    strict: bool = True,
) -> FrontShapeReport:
    """
    Label the tumour front Sharp, Smooth or Indeterminate.

    Each profile is smoothed with a 3-cell median before locating its
    eps_high and eps_low crossings. The label uses the median tail length
    over the last half of the snapshots: Sharp if <= k_sharp*dx, Smooth if
    >= 4*k_sharp*dx, Indeterminate in between or when a profile is not
    monotone over the front region.

    Args:
        snapshots: States carrying v, in time order
        grid: Mesh
        eps_high: Upper crossing level
        eps_low: Lower crossing level, below eps_high
        k_sharp: Tail threshold in cells
        strict: Raise on boundary contamination instead of returning
            Indeterminate

    Returns:
        FrontShapeReport for the snapshot sequence

    Raises:
        FrontNotFound: If a snapshot has no crossing
        BoundaryContamination: If an eps_low crossing lies within 5 cells of
            the domain edge and strict is True
    """
    thresholds = ShapeThresholds(eps_high=eps_high, eps_low=eps_low, k_sharp=k_sharp)
    if not snapshots:
        raise InvalidSpec("classify_front needs at least one snapshot")

    centers = grid.centers
    dx = grid.dx
    buffer = BOUNDARY_BUFFER_CELLS * dx
    recent = snapshots[len(snapshots) // 2 :]

    tails: list[float] = []
    monotone = True
    contaminated = False
    x_low = x_high = 0.0
    v_last = _smoothed(recent[-1].v)
    for snapshot in recent:
        v = _smoothed(snapshot.v)
        x_high = crossing_position(v, centers, thresholds.eps_high)
        x_low = crossing_position(v, centers, thresholds.eps_low)
        if x_low > grid.x_right - buffer or x_high < grid.x_left + buffer:
            message = f"front at t={snapshot.t:g} reaches the boundary buffer (edge x={x_low:.6g})"
            if strict:
                raise BoundaryContamination(message)
            logger.warning(message)
            contaminated = True
        if not _is_monotone_front(v, centers, x_high, x_low):
            logger.warning(f"Front profile at t={snapshot.t:g} is not monotone; shape is indeterminate")
            monotone = False
        tails.append(max(x_low - x_high, 0.0))

    tail_length = float(np.median(tails))
    if contaminated or not monotone:
        label = FrontLabel.INDETERMINATE
    elif tail_length <= thresholds.k_sharp * dx:
        label = FrontLabel.SHARP
    elif tail_length >= SMOOTH_FACTOR * thresholds.k_sharp * dx:
        label = FrontLabel.SMOOTH
    else:
        label = FrontLabel.INDETERMINATE

    logger.debug(f"Front tail {tail_length:.4g} ({tail_length / dx:.1f} cells) -> {label.value}")
    return FrontShapeReport(
        label=label,
        edge_position=x_low,
        tail_length=tail_length,
        edge_slope=_edge_slope(v_last, thresholds.eps_low, dx),
    )


class GapReport(BaseModel):
    """Widest interval where both u and v are below a level."""

    model_config = ConfigDict(frozen=True)

    start: float = Field(description="Left end of the gap")
    end: float = Field(description="Right end of the gap")
    cells: int = Field(description="Number of cells in the gap", ge=0)

    @property
    def width(self) -> float:
        return self.end - self.start


def interstitial_gap(state: FieldState, grid: Grid1D, level: float = 0.1) -> GapReport:
    """
    Locate the hypocellular gap between the healthy and tumour fronts.

    Args:
        state: State carrying u and v
        grid: Mesh
        level: Density below which a cell counts as empty

    Returns:
        GapReport of the longest run of cells with u < level and v < level
        (zero cells when there is none)
    """
    if state.u is None:
        raise InvalidSpec("interstitial gap needs the healthy density u")

    empty = (state.u < level) & (state.v < level)
    # run boundaries of the boolean mask
    edges = np.diff(np.concatenate(([0], empty.astype(np.int8), [0])))
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    if starts.size == 0:
        return GapReport(start=0.0, end=0.0, cells=0)

    longest = int(np.argmax(ends - starts))
    first, stop = int(starts[longest]), int(ends[longest])
    return GapReport(
        start=grid.x_left + first * grid.dx,
        end=grid.x_left + stop * grid.dx,
        cells=stop - first,
    )

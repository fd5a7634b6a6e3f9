"""Closed-form traveling front of the heterogeneous one-equation model."""

import logging
import math

import numpy as np

from ..errors import NonPositiveD
from ..models import Vector

logger = logging.getLogger(__name__)


def exact_speed(d: float) -> float:
    """Wave speed s = sqrt(d/2)."""
    if d <= 0:
        raise NonPositiveD(f"d must be > 0, got {d}")
    return math.sqrt(d / 2.0)


def exact_front(x: float, t: float, d: float) -> float:
    """
    v(x, t) = 1 - exp((x - s t) / sqrt(2d)) for x <= s t, else 0.

    The profile solves the one-equation model for d < 1; other positive d
    are accepted but the profile is then only a reference shape.

    Args:
        x: Position relative to the front origin
        t: Time
        d: Death rate, d > 0

    Returns:
        Tumour density

    Raises:
        NonPositiveD: If d <= 0
    """
    s = exact_speed(d)
    z = x - s * t
    if z > 0:
        return 0.0
    return 1.0 - math.exp(z / math.sqrt(2.0 * d))


def exact_profile(x: Vector, t: float, d: float, origin: float = 0.0) -> Vector:
    """
    Vectorised `exact_front` sampled at x - origin.

    Args:
        x: Positions, typically cell centres
        t: Time
        d: Death rate, d > 0
        origin: Position of the front edge at t = 0

    Returns:
        Exact tumour density per position
    """
    s = exact_speed(d)
    if d >= 1:
        logger.debug(f"Exact front requested for d={d} >= 1, outside its heterogeneous regime")
    z = np.asarray(x, dtype=np.float64) - origin - s * t
    # exp argument is clipped so the discarded branch cannot overflow
    inside = 1.0 - np.exp(np.minimum(z, 0.0) / math.sqrt(2.0 * d))
    return np.where(z <= 0, inside, 0.0)


def half_level_offset(d: float) -> float:
    """Distance from the v = 1/2 point of the exact front to its edge."""
    return math.sqrt(2.0 * d) * math.log(2.0)

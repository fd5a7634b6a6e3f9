"""Traveling-front diagnostics."""

from .exact import exact_front, exact_profile, exact_speed, half_level_offset
from .norms import ExactComparison, compare_with_exact, error_norms
from .shape import (
    DEFAULT_EPS_HIGH,
    DEFAULT_EPS_LOW,
    DEFAULT_K_SHARP,
    FrontShapeReport,
    GapReport,
    ShapeThresholds,
    classify_front,
    crossing_position,
    interstitial_gap,
)
from .speed import (
    DEFAULT_TAIL_FRACTION,
    SpeedEstimator,
    SpeedSeries,
    asymptotic_speed,
    asymptotic_speed_with_spread,
    front_jump,
    rescale_speed,
    speed_estimate_step,
)

__all__ = [
    # Speed
    "DEFAULT_TAIL_FRACTION",
    "SpeedEstimator",
    "SpeedSeries",
    "asymptotic_speed",
    "asymptotic_speed_with_spread",
    "front_jump",
    "rescale_speed",
    "speed_estimate_step",
    # Exact front
    "exact_front",
    "exact_profile",
    "exact_speed",
    "half_level_offset",
    # Shape
    "DEFAULT_EPS_HIGH",
    "DEFAULT_EPS_LOW",
    "DEFAULT_K_SHARP",
    "FrontShapeReport",
    "GapReport",
    "ShapeThresholds",
    "classify_front",
    "crossing_position",
    "interstitial_gap",
    # Norms
    "ExactComparison",
    "compare_with_exact",
    "error_norms",
]

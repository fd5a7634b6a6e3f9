"""Finite-volume operators and time steppers."""

from .evolve import Evolution, StepObserver, evolve
from .linalg import TridiagonalSystem, solve_tridiagonal
from .operators import (
    degenerate_flux_divergence,
    face_mobility,
    implicit_diffusion_system,
    laplacian,
    porous_flux_divergence,
)
from .steppers import (
    CFL_LIMIT,
    StepReport,
    one_eq_cfl_number,
    step_epsilon,
    step_full,
    step_one_eq,
    step_two_eq,
    stepper_for,
)

__all__ = [
    # Linear algebra
    "TridiagonalSystem",
    "solve_tridiagonal",
    # Operators
    "degenerate_flux_divergence",
    "face_mobility",
    "implicit_diffusion_system",
    "laplacian",
    "porous_flux_divergence",
    # Steppers
    "CFL_LIMIT",
    "StepReport",
    "one_eq_cfl_number",
    "step_epsilon",
    "step_full",
    "step_one_eq",
    "step_two_eq",
    "stepper_for",
    # Time loop
    "Evolution",
    "StepObserver",
    "evolve",
]

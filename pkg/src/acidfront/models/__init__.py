"""Core types shared by every model variant."""

from .enums import (
    Analysis,
    CflPolicy,
    EquilibriumLabel,
    ExactAlignment,
    FrontLabel,
    ModelVariant,
    Stability,
    SweepParameter,
)
from .equilibria import Equilibrium, equilibria, invaded_state
from .grid import Grid1D, TimeControl, make_grid
from .params import ModelParams
from .state import (
    Array,
    FieldState,
    Vector,
    recover_healthy,
    riemann_initial,
    riemann_states,
)

__all__ = [
    # Mesh & time
    "Grid1D",
    "TimeControl",
    "make_grid",
    # Parameters
    "ModelParams",
    # State
    "Array",
    "FieldState",
    "Vector",
    "riemann_initial",
    "riemann_states",
    "recover_healthy",
    # Equilibria
    "Equilibrium",
    "equilibria",
    "invaded_state",
    # Enums
    "Analysis",
    "CflPolicy",
    "EquilibriumLabel",
    "ExactAlignment",
    "FrontLabel",
    "ModelVariant",
    "Stability",
    "SweepParameter",
]

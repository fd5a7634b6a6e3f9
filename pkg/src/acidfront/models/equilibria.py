"""Stationary points of the reaction terms and their stability."""

from pydantic import BaseModel, ConfigDict, Field

from ..errors import NegativeParameter
from .enums import EquilibriumLabel, Stability


class Equilibrium(BaseModel):
    """A spatially constant stationary state (u*, v*)."""

    model_config = ConfigDict(frozen=True)

    label: EquilibriumLabel
    state: tuple[float, float] = Field(description="(u*, v*)")
    stability: Stability
    physical: bool = Field(
        default=True,
        description="False when u* < 0 (E3 for d > 1); the raw coordinate is still reported",
    )


def _threshold_stability(stable_if_above: bool, d: float) -> Stability:
    if d == 1.0:
        return Stability.DEGENERATE
    return Stability.STABLE if (d > 1.0) == stable_if_above else Stability.UNSTABLE


def equilibria(d: float) -> list[Equilibrium]:
    """
    List E0..E3 for death rate d.

    E2 = (0, 1) is stable for d > 1 and E3 = (1 - d, 1) for d < 1; both are
    degenerate at d = 1.

    Args:
        d: Death rate, d >= 0

    Returns:
        [E0, E1, E2, E3] in that order

    Raises:
        NegativeParameter: If d < 0
    """
    if d < 0:
        raise NegativeParameter(f"d must be >= 0, got {d}")

    return [
        Equilibrium(label=EquilibriumLabel.E0, state=(0.0, 0.0), stability=Stability.UNSTABLE),
        Equilibrium(label=EquilibriumLabel.E1, state=(1.0, 0.0), stability=Stability.UNSTABLE),
        Equilibrium(
            label=EquilibriumLabel.E2,
            state=(0.0, 1.0),
            stability=_threshold_stability(stable_if_above=True, d=d),
        ),
        Equilibrium(
            label=EquilibriumLabel.E3,
            state=(1.0 - d, 1.0),
            stability=_threshold_stability(stable_if_above=False, d=d),
            physical=d <= 1.0,
        ),
    ]


def invaded_state(d: float) -> tuple[float, float]:
    """Stable state left behind the front: ((1 - d)^+, 1)."""
    return (max(1.0 - d, 0.0), 1.0)

"""Enumeration types for model variants, equilibria and analyses."""

from enum import Enum


class ModelVariant(str, Enum):
    """Which member of the model hierarchy is simulated."""

    FULL_MODEL = "full"  # u, v, w with acid diffusion
    TWO_EQ = "twoeq"  # w = v, space rescaled so D = 1
    ONE_EQ = "oneeq"  # u = (1 - d v)^+, degenerate scalar equation
    EPSILON_SYSTEM = "epsilon"  # two-eq with eps * du/dt

    @property
    def stores_healthy(self) -> bool:
        """Whether u is carried as an independent field."""
        return self is not ModelVariant.ONE_EQ

    @property
    def field_count(self) -> int:
        """Number of fields in a Riemann state tuple."""
        return {
            ModelVariant.FULL_MODEL: 3,
            ModelVariant.TWO_EQ: 2,
            ModelVariant.ONE_EQ: 1,
            ModelVariant.EPSILON_SYSTEM: 2,
        }[self]


class EquilibriumLabel(str, Enum):
    """Stationary points of the two-equation reaction terms."""

    E0 = "E0"  # absence of species
    E1 = "E1"  # healthy state
    E2 = "E2"  # homogeneous state
    E3 = "E3"  # heterogeneous state


class Stability(str, Enum):
    """Linear stability of an equilibrium."""

    STABLE = "stable"
    UNSTABLE = "unstable"
    DEGENERATE = "degenerate"


class FrontLabel(str, Enum):
    """Numerical front-shape classification."""

    SHARP = "sharp"
    SMOOTH = "smooth"
    INDETERMINATE = "indeterminate"


class CflPolicy(str, Enum):
    """Reaction to an explicit-scheme stability violation."""

    WARN = "warn"
    FAIL = "fail"


class Analysis(str, Enum):
    """Diagnostics attached to an experiment run."""

    SPEED = "speed"
    SHAPE = "shape"
    EXACT_COMPARE = "exact"


class SweepParameter(str, Enum):
    """Parameter varied by a sweep."""

    R = "r"
    D = "d"
    EPSILON = "epsilon"
    C = "c"


class ExactAlignment(str, Enum):
    """How the exact front is positioned against a numerical profile."""

    CROSSING = "crossing"  # both profiles cross v = 1/2 at the same x
    ANCHORED = "anchored"  # exact front starts at the Riemann jump

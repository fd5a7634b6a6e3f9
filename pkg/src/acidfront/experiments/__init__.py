"""Named experiments, sweeps and convergence studies."""

from .registry import (
    DEFAULT_EPSILONS,
    DEFAULT_MESHES,
    EXPERIMENTS,
    SWEEPS,
    VARIANT_DEFAULTS,
    get_experiment,
    get_sweep,
    list_experiments,
)
from .runner import epsilon_transition, refinement_study, run, sweep
from .spec import (
    DEFAULT_SNAPSHOT_COUNT,
    EpsilonRow,
    ExperimentResult,
    ExperimentSpec,
    RefinementRow,
    SweepRow,
    SweepSpec,
)

__all__ = [
    # Specs & results
    "DEFAULT_SNAPSHOT_COUNT",
    "EpsilonRow",
    "ExperimentResult",
    "ExperimentSpec",
    "RefinementRow",
    "SweepRow",
    "SweepSpec",
    # Registry
    "DEFAULT_EPSILONS",
    "DEFAULT_MESHES",
    "EXPERIMENTS",
    "SWEEPS",
    "VARIANT_DEFAULTS",
    "get_experiment",
    "get_sweep",
    "list_experiments",
    # Runner
    "epsilon_transition",
    "refinement_study",
    "run",
    "sweep",
]

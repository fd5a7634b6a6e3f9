"""
Builtin experiments and sweeps.

Grids and parameters are the reference sets of each model:

- full model: d=12.5, r=1, D=4e-5, c=70, dx=dt=0.005, T=20 on [-1, 1]
- two-equation reduction: dx=dt=0.005, T=20, r=1 on [0, 40]
- one-equation reduction: dx=0.05, dt=0.001, T=20 on [0, 40]
"""

from collections.abc import Callable

from ..analysis import ShapeThresholds
from ..errors import UnknownExperiment
from ..models import Analysis, ModelParams, ModelVariant, SweepParameter
from .spec import ExperimentSpec, SweepSpec

SPEED = frozenset({Analysis.SPEED})
SPEED_SHAPE = frozenset({Analysis.SPEED, Analysis.SHAPE})
SPEED_SHAPE_EXACT = frozenset({Analysis.SPEED, Analysis.SHAPE, Analysis.EXACT_COMPARE})

# Full model: acid production rate and its thin Fisher tail
FULL_C = 70.0
FULL_D = 4e-5
FULL_SHAPE = ShapeThresholds(eps_low=1e-40)

# Two-equation edges fall with slope about -s/d: at dx = 0.005 a 0.1 level sits
# about 20 cells behind the edge, so the upper level is lowered instead.
TWO_EQ_SHAPE = ShapeThresholds(eps_high=0.01)

DEFAULT_EPSILONS = (1.0, 0.5, 0.2, 0.1, 0.05, 0.02, 0.01)
DEFAULT_MESHES = ((0.05, 0.001), (0.01, 0.0001))


def _describe(spec: ExperimentSpec, note: str = "") -> ExperimentSpec:
    """Fill the provenance with the parameter set, mesh and non-default thresholds."""
    params = spec.params
    parts = [f"{params.variant.value}: d={params.d:g} r={params.r:g}"]
    if params.variant is ModelVariant.FULL_MODEL:
        parts.append(f"D={params.D:g} c={params.c:g}")
    if params.variant is ModelVariant.EPSILON_SYSTEM:
        parts.append(f"epsilon={params.epsilon:g}")
    grid, time = spec.grid, spec.time
    parts.append(f"dx={grid.dx:g} dt={time.dt:g} T={time.t_final:g} on [{grid.x_left:g}, {grid.x_right:g}]")
    default = ShapeThresholds()
    if Analysis.SHAPE in spec.analyses:
        if spec.shape.eps_high != default.eps_high:
            parts.append(f"shape eps_high={spec.shape.eps_high:g}")
        if spec.shape.eps_low != default.eps_low:
            parts.append(f"shape eps_low={spec.shape.eps_low:g}")
    if note:
        parts.append(note)
    return spec.model_copy(update={"provenance": ", ".join(parts)})


def _full(name: str, d: float, analyses: frozenset[Analysis] = SPEED_SHAPE) -> ExperimentSpec:
    spec = ExperimentSpec.riemann(
        name,
        ModelParams(variant=ModelVariant.FULL_MODEL, d=d, r=1.0, D=FULL_D, c=FULL_C),
        x_left=-1.0,
        x_right=1.0,
        x_jump=-0.5,
        dx=0.005,
        dt=0.005,
        t_final=20.0,
        analyses=analyses,
        shape=FULL_SHAPE,
    )
    return _describe(spec, "reference full-model set" if analyses == SPEED_SHAPE else "")


def _two_eq(name: str, d: float) -> ExperimentSpec:
    spec = ExperimentSpec.riemann(
        name,
        ModelParams(variant=ModelVariant.TWO_EQ, d=d, r=1.0),
        x_left=0.0,
        x_right=40.0,
        x_jump=10.0,
        dx=0.005,
        dt=0.005,
        t_final=20.0,
        analyses=SPEED_SHAPE,
        shape=TWO_EQ_SHAPE,
    )
    return _describe(spec, "reference two-equation grid")


def _one_eq(name: str, d: float, dx: float, dt: float, analyses: frozenset[Analysis]) -> ExperimentSpec:
    spec = ExperimentSpec.riemann(
        name,
        ModelParams(variant=ModelVariant.ONE_EQ, d=d, r=1.0),
        x_left=0.0,
        x_right=40.0,
        x_jump=10.0,
        dx=dx,
        dt=dt,
        t_final=20.0,
        analyses=analyses,
    )
    note = "refined mesh" if dx < 0.05 else "reference one-equation grid"
    if Analysis.EXACT_COMPARE in analyses:
        note += ", compared with the exact front"
    return _describe(spec, note)


def _epsilon_base() -> ExperimentSpec:
    spec = ExperimentSpec.riemann(
        "epsilon_base",
        ModelParams(variant=ModelVariant.EPSILON_SYSTEM, d=0.5, r=1.0, epsilon=1.0),
        x_left=0.0,
        x_right=40.0,
        x_jump=10.0,
        dx=0.05,
        dt=0.001,
        t_final=20.0,
        analyses=SPEED,
    )
    return _describe(spec, "one-equation grid, epsilon swept by the epsilon study")


def _sweep_base(name: str, d: float) -> ExperimentSpec:
    # Fast fronts need dt < dx: the semi-implicit support grows one cell per step
    spec = ExperimentSpec.riemann(
        name,
        ModelParams(variant=ModelVariant.TWO_EQ, d=d, r=1.0),
        x_left=0.0,
        x_right=60.0,
        x_jump=5.0,
        dx=0.02,
        dt=0.002,
        t_final=10.0,
        analyses=SPEED,
    )
    return _describe(spec, "sweep grid")


EXPERIMENTS: dict[str, Callable[[], ExperimentSpec]] = {
    "full_homogeneous": lambda: _full("full_homogeneous", 12.5),
    "full_heterogeneous": lambda: _full("full_heterogeneous", 0.5),
    "twoeq_heterogeneous": lambda: _two_eq("twoeq_heterogeneous", 0.5),
    "twoeq_homogeneous": lambda: _two_eq("twoeq_homogeneous", 2.0),
    "oneeq_heterogeneous": lambda: _one_eq("oneeq_heterogeneous", 0.5, 0.05, 0.001, SPEED_SHAPE_EXACT),
    "oneeq_homogeneous": lambda: _one_eq("oneeq_homogeneous", 2.0, 0.05, 0.001, SPEED_SHAPE),
    "oneeq_exact_refined": lambda: _one_eq("oneeq_exact_refined", 0.5, 0.01, 0.0001, SPEED_SHAPE_EXACT),
    "epsilon_base": _epsilon_base,
}

SWEEPS: dict[str, Callable[[], SweepSpec]] = {
    "r_sweep": lambda: SweepSpec(
        base=_sweep_base("r_sweep", 2.0),
        parameter=SweepParameter.R,
        values=(0.5, 1.0, 2.0, 3.0, 4.0, 5.0),
    ),
    "d_sweep": lambda: SweepSpec(
        base=_sweep_base("d_sweep", 2.0),
        parameter=SweepParameter.D,
        values=(0.5, 1.0, 2.0, 4.0, 8.0),
    ),
    "c_sweep": lambda: SweepSpec(
        base=_full("c_sweep", 12.5, analyses=SPEED),
        parameter=SweepParameter.C,
        values=(10.0, 70.0, 200.0),
    ),
}

# Builtin experiment used when a config names only a variant
VARIANT_DEFAULTS = {
    ModelVariant.FULL_MODEL: "full_homogeneous",
    ModelVariant.TWO_EQ: "twoeq_heterogeneous",
    ModelVariant.ONE_EQ: "oneeq_heterogeneous",
    ModelVariant.EPSILON_SYSTEM: "epsilon_base",
}


def get_experiment(name: str) -> ExperimentSpec:
    """
    Builtin experiment by name.

    Raises:
        UnknownExperiment: If no builtin has that name
    """
    factory = EXPERIMENTS.get(name)
    if factory is None:
        raise UnknownExperiment(
            f"unknown experiment {name!r}; builtins: {', '.join(sorted(EXPERIMENTS))}"
        )
    return factory()


def get_sweep(name: str) -> SweepSpec:
    """
    Builtin sweep by name.

    Raises:
        UnknownExperiment: If no builtin sweep has that name
    """
    factory = SWEEPS.get(name)
    if factory is None:
        raise UnknownExperiment(f"unknown sweep {name!r}; builtins: {', '.join(sorted(SWEEPS))}")
    return factory()


def list_experiments() -> list[ExperimentSpec]:
    """Every builtin experiment, in registry order."""
    return [factory() for factory in EXPERIMENTS.values()]

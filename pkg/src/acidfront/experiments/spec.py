"""Experiment, sweep and result models."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..analysis import (
    DEFAULT_TAIL_FRACTION,
    ExactComparison,
    FrontShapeReport,
    GapReport,
    ShapeThresholds,
    SpeedSeries,
)
from ..errors import InvalidSpec
from ..models import (
    Analysis,
    FieldState,
    Grid1D,
    ModelParams,
    ModelVariant,
    SweepParameter,
    TimeControl,
    make_grid,
    riemann_states,
)

DEFAULT_SNAPSHOT_COUNT = 5


class ExperimentSpec(BaseModel):
    """A reproducible Riemann-problem run with its attached analyses."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Identifier, also the output subdirectory")
    params: ModelParams
    grid: Grid1D
    time: TimeControl
    x_jump: float = Field(description="Position of the initial jump")
    left_state: tuple[float, ...] = Field(description="Field values behind the front")
    right_state: tuple[float, ...] = Field(description="Field values ahead of the front")
    analyses: frozenset[Analysis] = Field(default_factory=lambda: frozenset({Analysis.SPEED}))
    shape: ShapeThresholds = Field(default_factory=ShapeThresholds)
    tail_fraction: float = Field(default=DEFAULT_TAIL_FRACTION, gt=0, le=1)
    provenance: str = Field(default="", description="Where the defaults come from")

    @model_validator(mode="after")
    def check_capabilities(self) -> "ExperimentSpec":
        count = self.params.variant.field_count
        if len(self.left_state) != count or len(self.right_state) != count:
            raise InvalidSpec(f"{self.params.variant.value} needs {count}-field Riemann states")
        if not self.grid.x_left < self.x_jump < self.grid.x_right:
            raise InvalidSpec(f"x_jump={self.x_jump} not inside the domain")
        if Analysis.EXACT_COMPARE in self.analyses and (
            self.params.variant is not ModelVariant.ONE_EQ or self.params.d >= 1
        ):
            raise InvalidSpec("exact comparison needs the one-equation model with d < 1")
        return self

    @property
    def variant(self) -> ModelVariant:
        return self.params.variant

    @classmethod
    def riemann(
        cls,
        name: str,
        params: ModelParams,
        *,
        x_left: float,
        x_right: float,
        x_jump: float,
        dx: float,
        dt: float,
        t_final: float,
        snapshot_count: int = DEFAULT_SNAPSHOT_COUNT,
        analyses: frozenset[Analysis] | None = None,
        shape: ShapeThresholds | None = None,
        tail_fraction: float = DEFAULT_TAIL_FRACTION,
        provenance: str = "",
    ) -> "ExperimentSpec":
        """
        Spec on a uniform grid with the variant's default Riemann states.

        Raises:
            InvalidDomain: If x_left >= x_right or dx <= 0
            NonIntegerCellCount: If the domain is not a whole number of cells
        """
        left, right = riemann_states(params.variant, params.d)
        return cls(
            name=name,
            params=params,
            grid=make_grid(x_left, x_right, dx),
            time=TimeControl.evenly(dt, t_final, snapshot_count),
            x_jump=x_jump,
            left_state=left,
            right_state=right,
            analyses=analyses if analyses is not None else frozenset({Analysis.SPEED}),
            shape=shape if shape is not None else ShapeThresholds(),
            tail_fraction=tail_fraction,
            provenance=provenance,
        )

    def with_parameter(self, parameter: SweepParameter, value: float) -> "ExperimentSpec":
        """
        Copy with one model parameter replaced.

        Changing d recomputes the Riemann states so the left state stays the
        invaded equilibrium.
        """
        params = self.params.with_value(parameter.value, value)
        update: dict[str, object] = {"params": params, "name": f"{self.name}_{parameter.value}{value:g}"}
        if parameter is SweepParameter.D:
            update["left_state"], update["right_state"] = riemann_states(params.variant, params.d)
        return self.model_copy(update=update)


_PARAMETER_VARIANTS = {
    SweepParameter.EPSILON: ModelVariant.EPSILON_SYSTEM,
    SweepParameter.C: ModelVariant.FULL_MODEL,
}


class SweepSpec(BaseModel):
    """One experiment repeated over a monotone list of parameter values."""

    model_config = ConfigDict(frozen=True)

    base: ExperimentSpec
    parameter: SweepParameter
    values: tuple[float, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def check_values(self) -> "SweepSpec":
        required = _PARAMETER_VARIANTS.get(self.parameter)
        if required is not None and self.base.variant is not required:
            raise InvalidSpec(f"sweeping {self.parameter.value} needs the {required.value} model")
        steps = [b - a for a, b in zip(self.values, self.values[1:], strict=False)]
        if steps and not (all(s > 0 for s in steps) or all(s < 0 for s in steps)):
            raise InvalidSpec("sweep values must be strictly monotone")
        for value in self.values:
            self.base.with_parameter(self.parameter, value)
        return self

    def specs(self) -> list[ExperimentSpec]:
        """One experiment per value, in value order."""
        return [self.base.with_parameter(self.parameter, value) for value in self.values]


class ExperimentResult(BaseModel):
    """Snapshots and derived metrics of one run."""

    model_config = ConfigDict(frozen=True)

    spec: ExperimentSpec
    snapshots: list[FieldState]
    final: FieldState
    steps: int = Field(ge=0)
    max_cfl: float | None = None
    speed: SpeedSeries | None = Field(default=None, description="Tumour-front speed series")
    healthy_speed: SpeedSeries | None = Field(default=None, description="Healthy-front speed series")
    asymptotic_speed: float | None = None
    speed_spread: float | None = Field(default=None, description="Peak-to-peak spread of the tail")
    healthy_asymptotic_speed: float | None = None
    shape: FrontShapeReport | None = None
    exact: ExactComparison | None = None
    gap: GapReport | None = None


class SweepRow(BaseModel):
    """One sweep value and its outcome."""

    model_config = ConfigDict(frozen=True)

    value: float
    speed: float | None = None
    spread: float | None = None
    error: str | None = Field(default=None, description="Error class and message when the run failed")


class EpsilonRow(BaseModel):
    """One point of the epsilon-transition study."""

    model_config = ConfigDict(frozen=True)

    epsilon: float
    speed: float | None = None
    l_inf: float | None = Field(default=None, description="Final-time L-inf distance to the exact front")
    error: str | None = None


class RefinementRow(BaseModel):
    """One mesh of the refinement study."""

    model_config = ConfigDict(frozen=True)

    dx: float
    dt: float
    speed: float | None = None
    l_inf: float | None = None
    error: str | None = None

"""
Plain-text run configuration.

Grammar: one ``key = value`` per line, ``#`` starts a comment, blank lines
are ignored and a repeated key overrides the earlier one. Lists are comma
separated; meshes are ``dx:dt`` pairs::

    experiment = oneeq_heterogeneous
    d = 0.25            # override the builtin death rate
    snapshot_count = 9
    values = 0.5, 1, 2
    meshes = 0.05:0.001, 0.01:0.0001

Keys not given fall back to the named builtin experiment.
"""

import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from ..analysis import ShapeThresholds
from ..errors import InvalidSpec, ParseError, UnknownExperiment, UnknownKey
from ..experiments import (
    DEFAULT_EPSILONS,
    DEFAULT_MESHES,
    EXPERIMENTS,
    SWEEPS,
    VARIANT_DEFAULTS,
    ExperimentSpec,
    SweepSpec,
    get_experiment,
    get_sweep,
)
from ..models import Analysis, CflPolicy, ModelParams, ModelVariant, SweepParameter

logger = logging.getLogger(__name__)

TRUE_WORDS = {"true", "yes", "on", "1"}
FALSE_WORDS = {"false", "no", "off", "0"}


class RunConfig(BaseModel):
    """Parsed run configuration; unset keys are None."""

    model_config = ConfigDict(frozen=True)

    # Which builtin to start from
    experiment: str | None = Field(default=None, description="Builtin experiment name")
    sweep: str | None = Field(default=None, description="Builtin sweep name")

    # Model
    variant: ModelVariant | None = None
    d: float | None = None
    r: float | None = None
    D: float | None = None
    c: float | None = None
    epsilon: float | None = None

    # Mesh & time
    x_left: float | None = None
    x_right: float | None = None
    x_jump: float | None = None
    dx: float | None = None
    dt: float | None = None
    t_final: float | None = None
    snapshot_count: int | None = None

    # Analyses
    speed: bool | None = None
    shape: bool | None = None
    exact: bool | None = None
    eps_high: float | None = None
    eps_low: float | None = None
    k_sharp: float | None = None
    tail_fraction: float | None = None

    # Studies
    parameter: SweepParameter | None = None
    values: tuple[float, ...] | None = None
    meshes: tuple[tuple[float, float], ...] | None = None

    # Output
    output_dir: Path | None = None
    cfl_policy: CflPolicy | None = None

    @classmethod
    def for_experiment(cls, name: str) -> "RunConfig":
        """Config spelling out every spec field of a builtin experiment."""
        return cls.model_validate(spec_values(get_experiment(name)))

    def explicit(self) -> dict[str, Any]:
        """Keys that carry a value."""
        return {k: v for k, v in self.model_dump().items() if v is not None}

    def base_spec(self, default: str | None = None) -> ExperimentSpec:
        """
        Builtin experiment this config starts from.

        Raises:
            UnknownExperiment: If the config names none and no default is given
        """
        if self.experiment is not None:
            return get_experiment(self.experiment)
        if self.sweep is not None:
            return get_sweep(self.sweep).base
        if self.variant is not None:
            return get_experiment(VARIANT_DEFAULTS[self.variant])
        if default is not None:
            return get_experiment(default)
        raise UnknownExperiment("config names no experiment (set experiment, sweep or variant)")

    def to_spec(self, default: str | None = None) -> ExperimentSpec:
        """
        Merge the config over its base experiment.

        Changing the variant drops the base's variant-specific parameters
        (D, c, epsilon) and its exact comparison unless they are set here.

        Raises:
            UnknownExperiment: If no base experiment can be determined
            InputError: If the merged values do not form a valid experiment
        """
        base = self.base_spec(default)
        merged = spec_values(base)
        own = self.explicit()
        variant = own.get("variant", base.variant)
        if variant is not base.variant:
            for key in ("D", "c", "epsilon", "exact"):
                merged.pop(key, None)
        merged.update(own)

        params = ModelParams(
            variant=variant,
            d=merged["d"],
            r=merged["r"],
            D=merged.get("D") if variant is ModelVariant.FULL_MODEL else own.get("D"),
            c=merged.get("c") if variant is ModelVariant.FULL_MODEL else own.get("c"),
            epsilon=merged.get("epsilon") if variant is ModelVariant.EPSILON_SYSTEM else own.get("epsilon"),
        )
        analyses = {
            analysis
            for analysis, key in ((Analysis.SPEED, "speed"), (Analysis.SHAPE, "shape"), (Analysis.EXACT_COMPARE, "exact"))
            if merged.get(key)
        }
        if "exact" not in own and Analysis.EXACT_COMPARE in analyses:
            if variant is not ModelVariant.ONE_EQ or params.d >= 1:
                analyses.discard(Analysis.EXACT_COMPARE)

        return ExperimentSpec.riemann(
            base.name,
            params,
            x_left=merged["x_left"],
            x_right=merged["x_right"],
            x_jump=merged["x_jump"],
            dx=merged["dx"],
            dt=merged["dt"],
            t_final=merged["t_final"],
            snapshot_count=merged["snapshot_count"],
            analyses=frozenset(analyses),
            shape=ShapeThresholds(
                eps_high=merged["eps_high"], eps_low=merged["eps_low"], k_sharp=merged["k_sharp"]
            ),
            tail_fraction=merged["tail_fraction"],
            provenance=base.provenance,
        )

    def to_sweep(self) -> SweepSpec:
        """
        Sweep from a builtin sweep name and/or parameter and values.

        Raises:
            InvalidSpec: If neither a builtin sweep nor parameter and values are given
        """
        builtin = get_sweep(self.sweep) if self.sweep is not None else None
        parameter = self.parameter or (builtin.parameter if builtin else None)
        values = self.values or (builtin.values if builtin else None)
        if parameter is None or values is None:
            raise InvalidSpec("a sweep needs `sweep = <builtin>` or both `parameter` and `values`")
        return SweepSpec(base=self.to_spec(), parameter=parameter, values=values)

    def epsilon_values(self) -> tuple[float, ...]:
        return self.values if self.values is not None else DEFAULT_EPSILONS

    def mesh_list(self) -> tuple[tuple[float, float], ...]:
        return self.meshes if self.meshes is not None else DEFAULT_MESHES


def spec_values(spec: ExperimentSpec) -> dict[str, Any]:
    """RunConfig keys describing an experiment spec."""
    params = spec.params
    values: dict[str, Any] = {
        "experiment": spec.name if spec.name in EXPERIMENTS else None,
        "variant": params.variant,
        "d": params.d,
        "r": params.r,
        "D": params.D,
        "c": params.c,
        "epsilon": params.epsilon,
        "x_left": spec.grid.x_left,
        "x_right": spec.grid.x_right,
        "x_jump": spec.x_jump,
        "dx": spec.grid.dx,
        "dt": spec.time.dt,
        "t_final": spec.time.t_final,
        "snapshot_count": max(len(spec.time.snapshot_times), 1),
        "speed": Analysis.SPEED in spec.analyses,
        "shape": Analysis.SHAPE in spec.analyses,
        "exact": Analysis.EXACT_COMPARE in spec.analyses,
        "eps_high": spec.shape.eps_high,
        "eps_low": spec.shape.eps_low,
        "k_sharp": spec.shape.k_sharp,
        "tail_fraction": spec.tail_fraction,
    }
    return {k: v for k, v in values.items() if v is not None}


# Value parsers


def _float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"{text!r} is not a number") from None


def _positive(text: str) -> float:
    value = _float(text)
    if not value > 0:
        raise ValueError(f"must be > 0, got {value}")
    return value


def _non_negative(text: str) -> float:
    value = _float(text)
    if not value >= 0:
        raise ValueError(f"must be >= 0, got {value}")
    return value


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"{text!r} is not an integer") from None
    if value < 1:
        raise ValueError(f"must be >= 1, got {value}")
    return value


def _bool(text: str) -> bool:
    word = text.lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError(f"{text!r} is not a boolean (true/false)")


def _float_list(text: str) -> tuple[float, ...]:
    return tuple(_float(item.strip()) for item in text.split(",") if item.strip())


def _mesh_list(text: str) -> tuple[tuple[float, float], ...]:
    meshes = []
    for item in text.split(","):
        if not item.strip():
            continue
        dx, sep, dt = item.partition(":")
        if not sep:
            raise ValueError(f"mesh {item.strip()!r} is not dx:dt")
        meshes.append((_positive(dx.strip()), _positive(dt.strip())))
    return tuple(meshes)


def _choice(enum: type[ModelVariant] | type[CflPolicy] | type[SweepParameter]) -> Callable[[str], Any]:
    def parse(text: str) -> Any:
        try:
            return enum(text.lower())
        except ValueError:
            options = ", ".join(member.value for member in enum)
            raise ValueError(f"{text!r} is not one of {options}") from None

    return parse


def _name(registry: dict[str, Any], kind: str) -> Callable[[str], str]:
    def parse(text: str) -> str:
        if text not in registry:
            raise UnknownExperiment(f"unknown {kind} {text!r}; builtins: {', '.join(sorted(registry))}")
        return text

    return parse


PARSERS: dict[str, Callable[[str], Any]] = {
    "experiment": _name(EXPERIMENTS, "experiment"),
    "sweep": _name(SWEEPS, "sweep"),
    "variant": _choice(ModelVariant),
    "d": _non_negative,
    "r": _non_negative,
    "D": _non_negative,
    "c": _positive,
    "epsilon": _positive,
    "x_left": _float,
    "x_right": _float,
    "x_jump": _float,
    "dx": _positive,
    "dt": _positive,
    "t_final": _non_negative,
    "snapshot_count": _count,
    "speed": _bool,
    "shape": _bool,
    "exact": _bool,
    "eps_high": _positive,
    "eps_low": _positive,
    "k_sharp": _positive,
    "tail_fraction": _positive,
    "parameter": _choice(SweepParameter),
    "values": _float_list,
    "meshes": _mesh_list,
    "output_dir": Path,
    "cfl_policy": _choice(CflPolicy),
}


def parse_config(text: str, *, require_experiment: bool = True) -> RunConfig:
    """
    Parse ``key = value`` text into a RunConfig.

    Args:
        text: Config file contents
        require_experiment: Reject configs naming no experiment, sweep or variant

    Returns:
        Parsed configuration

    Raises:
        ParseError: Malformed line or invalid value, with its line number
        UnknownKey: Key not in the grammar
        UnknownExperiment: Unknown builtin name, or none named when required
    """
    values: dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ParseError(number, f"expected `key = value`, got {raw.strip()!r}")
        parser = PARSERS.get(key)
        if parser is None:
            raise UnknownKey(number, f"unknown key {key!r}")
        if not value:
            raise ParseError(number, f"{key} has no value")
        try:
            values[key] = parser(value)
        except UnknownExperiment as e:
            e.add_note(f"line {number}")
            raise
        except ValueError as e:
            raise ParseError(number, f"{key}: {e}") from e

    if require_experiment and not {"experiment", "sweep", "variant"} & values.keys():
        raise UnknownExperiment("config names no experiment (set experiment, sweep or variant)")

    logger.debug(f"Parsed run config keys: {', '.join(sorted(values))}")
    return RunConfig.model_validate(values)


def _render_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, ModelVariant | CflPolicy | SweepParameter):
        return value.value
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple):
        if value and isinstance(value[0], tuple):
            return ", ".join(f"{dx!r}:{dt!r}" for dx, dt in value)
        return ", ".join(repr(v) for v in value)
    return str(value)


def render_config(config: RunConfig) -> str:
    """Render a RunConfig so that parse_config reads it back unchanged."""
    lines = [f"{key} = {_render_value(value)}" for key, value in config.explicit().items()]
    return "\n".join(lines) + "\n"


def with_overrides(text: str, overrides: list[str]) -> str:
    """Append ``--set key=value`` overrides after the file contents."""
    if not overrides:
        return text
    body = text if not text or text.endswith("\n") else text + "\n"
    return body + "\n".join(overrides) + "\n"

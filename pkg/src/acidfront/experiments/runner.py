"""Run experiments, sweeps and the two convergence studies."""

import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

from aws_lambda_powertools import Logger

from ..analysis import (
    SpeedEstimator,
    asymptotic_speed,
    asymptotic_speed_with_spread,
    classify_front,
    compare_with_exact,
    front_jump,
    interstitial_gap,
)
from ..config import get_settings
from ..errors import AcidFrontError, InvalidSpec
from ..models import (
    Analysis,
    CflPolicy,
    ModelParams,
    ModelVariant,
    SweepParameter,
    riemann_initial,
)
from ..schemes import evolve
from .registry import DEFAULT_EPSILONS, DEFAULT_MESHES, get_experiment
from .spec import (
    EpsilonRow,
    ExperimentResult,
    ExperimentSpec,
    RefinementRow,
    SweepRow,
    SweepSpec,
)

logger = Logger(service="acidfront-experiments", level=get_settings().log_level, stream=sys.stderr)

T = TypeVar("T")
R = TypeVar("R")


def run(spec: ExperimentSpec, cfl_policy: CflPolicy | None = None) -> ExperimentResult:
    """
    Build the Riemann data, evolve it and attach the requested analyses.

    Args:
        spec: Experiment to run
        cfl_policy: Overrides Settings.cfl_policy

    Returns:
        ExperimentResult with snapshots and metrics

    Raises:
        AcidFrontError: Scheme or analysis failure, noted with the experiment name
    """
    policy = cfl_policy if cfl_policy is not None else get_settings().cfl_policy
    params = spec.params
    grid = spec.grid
    logger.info(
        f"Starting experiment {spec.name}",
        extra={
            "variant": params.variant.value,
            "cells": grid.n_cells,
            "steps": spec.time.n_steps,
        },
    )

    try:
        state = riemann_initial(grid, spec.left_state, spec.right_state, spec.x_jump)

        estimators: list[SpeedEstimator] = []
        if Analysis.SPEED in spec.analyses:
            estimators.append(SpeedEstimator("v", grid.dx, spec.time.dt, front_jump("v", params.d)))
            if params.variant.stores_healthy and front_jump("u", params.d) != 0:
                estimators.append(
                    SpeedEstimator("u", grid.dx, spec.time.dt, front_jump("u", params.d))
                )

        evolution = evolve(state, params, grid, spec.time, observers=estimators, cfl_policy=policy)
        metrics: dict[str, object] = {}

        if estimators:
            tumour = estimators[0].series
            metrics["speed"] = tumour
            if len(tumour):
                speed, spread = asymptotic_speed_with_spread(tumour, spec.tail_fraction)
                metrics["asymptotic_speed"] = speed
                metrics["speed_spread"] = spread
            if len(estimators) > 1:
                healthy = estimators[1].series
                metrics["healthy_speed"] = healthy
                if len(healthy):
                    metrics["healthy_asymptotic_speed"] = asymptotic_speed(healthy, spec.tail_fraction)

        if Analysis.SHAPE in spec.analyses:
            thresholds = spec.shape
            metrics["shape"] = classify_front(
                evolution.snapshots or [evolution.final],
                grid,
                eps_high=thresholds.eps_high,
                eps_low=thresholds.eps_low,
                k_sharp=thresholds.k_sharp,
                strict=False,
            )

        if Analysis.EXACT_COMPARE in spec.analyses:
            metrics["exact"] = compare_with_exact(evolution.final, grid, params.d, spec.x_jump)

        if params.variant is ModelVariant.FULL_MODEL:
            metrics["gap"] = interstitial_gap(evolution.final, grid)

    except AcidFrontError as e:
        e.add_note(f"experiment {spec.name}")
        raise

    result = ExperimentResult(
        spec=spec,
        snapshots=evolution.snapshots,
        final=evolution.final,
        steps=evolution.steps,
        max_cfl=evolution.max_cfl,
        **metrics,  # type: ignore[arg-type]
    )
    logger.info(
        f"Finished experiment {spec.name}",
        extra={
            "asymptotic_speed": result.asymptotic_speed,
            "label": result.shape.label.value if result.shape else None,
        },
    )
    return result


def _describe(error: BaseException) -> str:
    return f"{type(error).__name__}: {error}"


def _fan_out(
    func: Callable[[T], R], items: Sequence[T], workers: int | None
) -> list[R | BaseException]:
    """
    Apply func to every item, keeping item order.

    Runs in-process for one worker, otherwise on a process pool. Failures
    come back in place of results.
    """
    count = workers if workers is not None else get_settings().sweep_workers
    outcomes: list[R | BaseException] = []

    if count <= 1 or len(items) <= 1:
        for item in items:
            try:
                outcomes.append(func(item))
            except AcidFrontError as e:
                outcomes.append(e)
        return outcomes

    with ProcessPoolExecutor(max_workers=min(count, len(items))) as pool:
        futures = [pool.submit(func, item) for item in items]
        for future in futures:
            try:
                outcomes.append(future.result())
            except AcidFrontError as e:
                outcomes.append(e)
    return outcomes


def _raise_if_all_failed(outcomes: Sequence[object], what: str) -> None:
    errors = [o for o in outcomes if isinstance(o, BaseException)]
    if outcomes and len(errors) == len(outcomes):
        first = errors[0]
        first.add_note(f"every {what} run failed")
        raise first


def _sweep_point(spec: ExperimentSpec) -> tuple[float, float]:
    result = run(spec)
    if result.speed is None or not len(result.speed):
        raise InvalidSpec(f"{spec.name} recorded no speed")
    return asymptotic_speed_with_spread(result.speed, spec.tail_fraction)


def sweep(spec: SweepSpec, workers: int | None = None) -> list[SweepRow]:
    """
    Asymptotic tumour speed for every sweep value.

    Args:
        spec: Base experiment, parameter and values
        workers: Process count (defaults to Settings.sweep_workers)

    Returns:
        One row per value, in value order; failed values carry the error

    Raises:
        AcidFrontError: Only if every value failed
    """
    logger.info(f"Sweeping {spec.parameter.value} over {len(spec.values)} values")
    specs = [s.model_copy(update={"analyses": s.analyses | {Analysis.SPEED}}) for s in spec.specs()]
    outcomes = _fan_out(_sweep_point, specs, workers)

    rows: list[SweepRow] = []
    for value, outcome in zip(spec.values, outcomes, strict=True):
        if isinstance(outcome, BaseException):
            logger.exception(f"Sweep value {spec.parameter.value}={value} failed", exc_info=outcome)
            rows.append(SweepRow(value=value, error=_describe(outcome)))
        else:
            rows.append(SweepRow(value=value, speed=outcome[0], spread=outcome[1]))

    _raise_if_all_failed(outcomes, "sweep")
    return rows


def _epsilon_point(spec: ExperimentSpec) -> tuple[float, float]:
    result = run(spec)
    assert result.speed is not None
    comparison = compare_with_exact(result.final, spec.grid, spec.params.d, spec.x_jump)
    return asymptotic_speed(result.speed, spec.tail_fraction), comparison.l_inf


def epsilon_transition(
    values: Sequence[float] = DEFAULT_EPSILONS,
    base: ExperimentSpec | None = None,
    workers: int | None = None,
) -> list[EpsilonRow]:
    """
    Speed and distance to the exact front as epsilon decreases.

    Args:
        values: Relaxation times, strictly monotone
        base: Heterogeneous epsilon-system experiment (builtin epsilon_base)
        workers: Process count (defaults to Settings.sweep_workers)

    Returns:
        One row per epsilon with the asymptotic speed and final L-inf error

    Raises:
        InvalidSpec: If base is not an epsilon system with d < 1
    """
    base = base if base is not None else get_experiment("epsilon_base")
    if base.variant is not ModelVariant.EPSILON_SYSTEM or base.params.d >= 1:
        raise InvalidSpec("epsilon transition needs a heterogeneous (d < 1) epsilon system")

    plan = SweepSpec(base=base, parameter=SweepParameter.EPSILON, values=tuple(values))
    specs = [s.model_copy(update={"analyses": s.analyses | {Analysis.SPEED}}) for s in plan.specs()]
    logger.info(f"Epsilon transition over {len(specs)} values")
    outcomes = _fan_out(_epsilon_point, specs, workers)

    rows: list[EpsilonRow] = []
    for epsilon, outcome in zip(plan.values, outcomes, strict=True):
        if isinstance(outcome, BaseException):
            logger.exception(f"Epsilon {epsilon} failed", exc_info=outcome)
            rows.append(EpsilonRow(epsilon=epsilon, error=_describe(outcome)))
        else:
            rows.append(EpsilonRow(epsilon=epsilon, speed=outcome[0], l_inf=outcome[1]))

    _raise_if_all_failed(outcomes, "epsilon")
    return rows


def _mesh_spec(base: ExperimentSpec, d: float, dx: float, dt: float) -> ExperimentSpec:
    return ExperimentSpec.riemann(
        f"{base.name}_dx{dx:g}_dt{dt:g}",
        ModelParams(variant=ModelVariant.ONE_EQ, d=d, r=base.params.r),
        x_left=base.grid.x_left,
        x_right=base.grid.x_right,
        x_jump=base.x_jump,
        dx=dx,
        dt=dt,
        t_final=base.time.t_final,
        snapshot_count=len(base.time.snapshot_times) or 1,
        analyses=frozenset({Analysis.SPEED, Analysis.EXACT_COMPARE}),
        tail_fraction=base.tail_fraction,
        provenance=base.provenance,
    )


def _refinement_point(spec: ExperimentSpec) -> tuple[float, float]:
    result = run(spec)
    assert result.speed is not None and result.exact is not None
    return asymptotic_speed(result.speed, spec.tail_fraction), result.exact.l_inf


def refinement_study(
    d: float = 0.5,
    meshes: Sequence[tuple[float, float]] = DEFAULT_MESHES,
    base: ExperimentSpec | None = None,
    workers: int | None = None,
) -> list[RefinementRow]:
    """
    One-equation runs on successively finer meshes against the exact front.

    Args:
        d: Death rate, d < 1
        meshes: (dx, dt) pairs
        base: Supplies the domain, jump and horizon (builtin oneeq_heterogeneous)
        workers: Process count (defaults to Settings.sweep_workers)

    Returns:
        One row per mesh with the asymptotic speed and final L-inf error

    Raises:
        InvalidSpec: If d >= 1
    """
    if d >= 1:
        raise InvalidSpec(f"refinement study needs d < 1 for the exact front, got d={d}")
    base = base if base is not None else get_experiment("oneeq_heterogeneous")
    specs = [_mesh_spec(base, d, dx, dt) for dx, dt in meshes]
    logger.info(f"Refinement study over {len(specs)} meshes at d={d}")
    outcomes = _fan_out(_refinement_point, specs, workers)

    rows: list[RefinementRow] = []
    for (dx, dt), outcome in zip(meshes, outcomes, strict=True):
        if isinstance(outcome, BaseException):
            logger.exception(f"Mesh dx={dx} dt={dt} failed", exc_info=outcome)
            rows.append(RefinementRow(dx=dx, dt=dt, error=_describe(outcome)))
        else:
            rows.append(RefinementRow(dx=dx, dt=dt, speed=outcome[0], l_inf=outcome[1]))

    _raise_if_all_failed(outcomes, "refinement")
    return rows

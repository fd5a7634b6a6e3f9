"""
One-step time integrators for every model variant.

The systems (full, two-equation, epsilon) are semi-implicit: reactions are
evaluated at time level n, and the diffusion of v (and of w for the full
model) is taken at level n+1 with face coefficients built from u^{n+1}. The
scalar one-equation model is fully explicit.

Every stepper is a pure function of its inputs and returns the new state
together with a StepReport.
"""

import logging
import warnings
from collections.abc import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import CflViolation, InvalidSpec, NonFiniteState, StiffnessWarning
from ..models import CflPolicy, FieldState, Grid1D, ModelParams, ModelVariant, Vector
from .linalg import solve_tridiagonal
from .operators import face_mobility, implicit_diffusion_system, laplacian, porous_flux_divergence

logger = logging.getLogger(__name__)

CFL_LIMIT = 0.5


class StepReport(BaseModel):
    """Diagnostics of a single time step."""

    model_config = ConfigDict(frozen=True)

    t_new: float = Field(description="Time after the step")
    max_update: float = Field(description="L-infinity change over all fields", ge=0)
    cfl_number: float | None = Field(
        default=None,
        description="max F(v) dt/dx^2 (explicit schemes only)",
    )


Stepper = Callable[..., tuple[FieldState, StepReport]]


def _require(state: FieldState, params: ModelParams, variant: ModelVariant, *fields: str) -> None:
    if params.variant is not variant:
        raise InvalidSpec(f"{variant.value} stepper called with {params.variant.value} parameters")
    present = state.fields()
    missing = [name for name in fields if name not in present]
    if missing:
        raise InvalidSpec(f"{variant.value} stepper needs fields {', '.join(missing)}")


def _finish(previous: FieldState, dt: float, cfl_number: float | None = None, **new: Vector) -> tuple[FieldState, StepReport]:
    for name, values in new.items():
        if not np.isfinite(values).all():
            bad = int(np.flatnonzero(~np.isfinite(values))[0])
            raise NonFiniteState(f"{name} is not finite at cell {bad}")

    old = previous.fields()
    max_update = max(float(np.max(np.abs(values - old[name]))) for name, values in new.items())
    t_new = previous.t + dt
    return FieldState(t=t_new, **new), StepReport(
        t_new=t_new, max_update=max_update, cfl_number=cfl_number
    )


def _semi_implicit_pair(
    u: Vector,
    v: Vector,
    d: float,
    r: float,
    diffusion: float,
    dx: float,
    dt: float,
    healthy_rate: float,
    death_field: Vector,
    with_reaction: bool,
) -> tuple[Vector, Vector]:
    """
    Shared (u, v) update of the semi-implicit systems.

    healthy_rate multiplies the u-reaction (dt, or dt/epsilon); death_field is
    the field killing healthy cells (v for the reductions, w for the full
    model).
    """
    if with_reaction:
        u_new = u + healthy_rate * (u * (1.0 - u) - d * u * death_field)
        rhs = v + dt * r * v * (1.0 - v)
    else:
        u_new = u.copy()
        rhs = v.copy()

    lam = diffusion * dt / dx**2
    system = implicit_diffusion_system(face_mobility(u_new), rhs, lam)
    v_new = solve_tridiagonal(system)
    return u_new, v_new


def step_two_eq(
    state: FieldState,
    params: ModelParams,
    grid: Grid1D,
    dt: float,
    *,
    with_reaction: bool = True,
) -> tuple[FieldState, StepReport]:
    """
    Advance the two-equation reduction by one step.

    u is updated explicitly, then v solves

        -lam a_{i-1/2} v_{i-1} + (1 + lam (a_{i-1/2} + a_{i+1/2})) v_i
            - lam a_{i+1/2} v_{i+1} = v_i^n + r dt v_i^n (1 - v_i^n)

    with a_{i+1/2} = 1 - (u_i^{n+1} + u_{i+1}^{n+1})/2, lam = dt/dx^2 and
    a = 0 on the two boundary faces.

    Args:
        state: Current (u, v)
        params: Two-equation parameters
        grid: Mesh
        dt: Time step
        with_reaction: Drop all reaction terms when False

    Returns:
        New state and step diagnostics

    Raises:
        ZeroPivot: If the implicit system is singular
        NonFiniteState: If the new state has NaN/Inf entries
    """
    _require(state, params, ModelVariant.TWO_EQ, "u", "v")
    assert state.u is not None

    u_new, v_new = _semi_implicit_pair(
        state.u,
        state.v,
        d=params.d,
        r=params.r,
        diffusion=1.0,
        dx=grid.dx,
        dt=dt,
        healthy_rate=dt,
        death_field=state.v,
        with_reaction=with_reaction,
    )
    return _finish(state, dt, u=u_new, v=v_new)


def step_epsilon(
    state: FieldState,
    params: ModelParams,
    grid: Grid1D,
    dt: float,
    *,
    with_reaction: bool = True,
) -> tuple[FieldState, StepReport]:
    """
    Advance the epsilon-relaxed system by one step.

    Same as `step_two_eq` with r = 1 and the u-reaction scaled by dt/epsilon.
    Issues StiffnessWarning when dt/epsilon > 1.
    """
    _require(state, params, ModelVariant.EPSILON_SYSTEM, "u", "v")
    assert state.u is not None and params.epsilon is not None

    healthy_rate = dt / params.epsilon
    if healthy_rate > 1.0:
        warnings.warn(
            f"dt/epsilon = {healthy_rate:.3g} > 1: explicit relaxation of u may overshoot",
            StiffnessWarning,
            stacklevel=2,
        )

    u_new, v_new = _semi_implicit_pair(
        state.u,
        state.v,
        d=params.d,
        r=1.0,
        diffusion=1.0,
        dx=grid.dx,
        dt=dt,
        healthy_rate=healthy_rate,
        death_field=state.v,
        with_reaction=with_reaction,
    )
    return _finish(state, dt, u=u_new, v=v_new)


def step_full(
    state: FieldState,
    params: ModelParams,
    grid: Grid1D,
    dt: float,
    *,
    with_reaction: bool = True,
) -> tuple[FieldState, StepReport]:
    """
    Advance the full three-field model by one step.

    u dies at rate d w^n; v is updated as in the two-equation step with
    lam = D dt/dx^2; w solves (I - dt/dx^2 Lap) w^{n+1} = w^n + c dt (v^n - w^n).
    """
    _require(state, params, ModelVariant.FULL_MODEL, "u", "v", "w")
    assert state.u is not None and state.w is not None and params.c is not None

    u_new, v_new = _semi_implicit_pair(
        state.u,
        state.v,
        d=params.d,
        r=params.r,
        diffusion=params.diffusion,
        dx=grid.dx,
        dt=dt,
        healthy_rate=dt,
        death_field=state.w,
        with_reaction=with_reaction,
    )

    w = state.w
    rhs_w = w + dt * params.c * (state.v - w) if with_reaction else w.copy()
    acid = implicit_diffusion_system(np.ones(w.shape[0] - 1), rhs_w, dt / grid.dx**2)
    w_new = solve_tridiagonal(acid)
    return _finish(state, dt, u=u_new, v=v_new, w=w_new)


def one_eq_cfl_number(v: Vector, d: float, dt: float, dx: float) -> float:
    """max_i F(v_i) dt/dx^2 with F(v) = min(d v, 1)."""
    return float(np.max(np.minimum(d * v, 1.0))) * dt / dx**2


def step_one_eq(
    state: FieldState,
    params: ModelParams,
    grid: Grid1D,
    dt: float,
    *,
    cfl_policy: CflPolicy = CflPolicy.WARN,
    with_reaction: bool = True,
) -> tuple[FieldState, StepReport]:
    """
    Advance the scalar degenerate equation by one explicit step.

    Cells with v_i < 1/d diffuse with the porous-medium flux d v v_x; cells
    with v_i >= 1/d (ties included) use the plain Laplacian. The branch is
    chosen per cell on v^n.

    Args:
        state: Current v
        params: One-equation parameters
        grid: Mesh
        dt: Time step
        cfl_policy: FAIL raises when the CFL number exceeds 1/2
        with_reaction: Drop the logistic term when False

    Returns:
        New state and step diagnostics (with CFL number)

    Raises:
        CflViolation: If the CFL number exceeds 1/2 under policy FAIL
        NonFiniteState: If the new state has NaN/Inf entries
    """
    _require(state, params, ModelVariant.ONE_EQ, "v")
    v = state.v
    d = params.d

    cfl = one_eq_cfl_number(v, d, dt, grid.dx)
    if cfl > CFL_LIMIT and cfl_policy is CflPolicy.FAIL:
        raise CflViolation(f"CFL number {cfl:.4g} exceeds {CFL_LIMIT} (d={d}, dt={dt}, dx={grid.dx})")

    threshold = np.inf if d == 0 else 1.0 / d
    diffusion = np.where(
        v < threshold,
        d * porous_flux_divergence(v, grid.dx),
        laplacian(v, grid.dx),
    )
    v_new = v + dt * diffusion
    if with_reaction:
        v_new = v_new + dt * params.r * v * (1.0 - v)
    return _finish(state, dt, cfl_number=cfl, v=v_new)


_STEPPERS: dict[ModelVariant, Stepper] = {
    ModelVariant.FULL_MODEL: step_full,
    ModelVariant.TWO_EQ: step_two_eq,
    ModelVariant.ONE_EQ: step_one_eq,
    ModelVariant.EPSILON_SYSTEM: step_epsilon,
}


def stepper_for(variant: ModelVariant) -> Stepper:
    """Stepper matching a model variant."""
    return _STEPPERS[variant]

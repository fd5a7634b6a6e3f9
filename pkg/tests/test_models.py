"""Tests for the grid, parameter, state and equilibrium models."""

import numpy as np
import pytest
from pydantic import ValidationError

from acidfront.errors import (
    InvalidDomain,
    InvalidSpec,
    JumpOutsideDomain,
    LengthMismatch,
    NegativeParameter,
    NonIntegerCellCount,
)
from acidfront.models import (
    EquilibriumLabel,
    FieldState,
    Grid1D,
    ModelParams,
    ModelVariant,
    Stability,
    TimeControl,
    equilibria,
    invaded_state,
    make_grid,
    recover_healthy,
    riemann_initial,
    riemann_states,
)


def test_make_grid_reference_meshes():
    """Test the cell counts of the builtin meshes."""
    assert make_grid(0.0, 40.0, 0.05).n_cells == 800
    assert make_grid(0.0, 40.0, 0.005).n_cells == 8000
    assert make_grid(-1.0, 1.0, 0.005).n_cells == 400


def test_grid_centers():
    """Test cell centres sit half a cell inside each cell."""
    grid = make_grid(0.0, 1.0, 0.25)

    np.testing.assert_allclose(grid.centers, [0.125, 0.375, 0.625, 0.875])
    assert grid.dx == 0.25
    assert grid.length == 1.0
    assert make_grid(-1.0, 1.0, 0.005).length == 2.0


def test_grid_index_of():
    """Test locating the first centre at or right of a position."""
    grid = make_grid(0.0, 1.0, 0.25)

    assert grid.index_of(0.0) == 0
    assert grid.index_of(0.5) == 2
    assert grid.index_of(2.0) == 4


def test_make_grid_rejects_non_integer_cell_count():
    """Test a width that does not divide the domain."""
    with pytest.raises(NonIntegerCellCount, match="not an integer cell count"):
        make_grid(0.0, 1.0, 0.3)


@pytest.mark.parametrize(("x_left", "x_right", "dx"), [(1.0, 1.0, 0.1), (2.0, 1.0, 0.1), (0.0, 1.0, 0.0)])
def test_make_grid_rejects_bad_domain(x_left, x_right, dx):
    """Test empty or reversed domains and non-positive widths."""
    with pytest.raises(InvalidDomain):
        make_grid(x_left, x_right, dx)


def test_grid_direct_construction_validates():
    """Test the extent check when Grid1D is built directly."""
    with pytest.raises(ValidationError, match="x_left"):
        Grid1D(x_left=1.0, x_right=0.0, n_cells=10)
    with pytest.raises(ValidationError):
        Grid1D(x_left=0.0, x_right=1.0, n_cells=0)


def test_time_control_evenly():
    """Test evenly spread snapshots include both ends."""
    time = TimeControl.evenly(0.001, 20.0, 5)

    assert time.n_steps == 20000
    assert time.snapshot_steps == (0, 5000, 10000, 15000, 20000)
    assert time.snapshot_times == pytest.approx((0.0, 5.0, 10.0, 15.0, 20.0))


def test_time_control_zero_duration():
    """Test a zero horizon keeps only the initial snapshot."""
    time = TimeControl.evenly(0.01, 0.0, 5)

    assert time.n_steps == 0
    assert time.snapshot_times == (0.0,)


def test_time_control_shortens_last_step():
    """Test an unaligned horizon ends on t_final with a shorter last step."""
    time = TimeControl.evenly(0.3, 1.0, 5)

    assert not time.aligned
    assert time.n_steps == 4
    assert time.step_size(1) == 0.3
    assert time.step_size(4) == pytest.approx(0.1)
    assert time.time_at(4) == 1.0
    assert time.snapshot_steps == (0, 1, 2, 3, 4)
    assert time.snapshot_times[-1] == 1.0


def test_time_control_step_longer_than_horizon():
    """Test a step larger than t_final becomes a single step of length t_final."""
    time = TimeControl.evenly(1e9, 20.0, 5)

    assert time.n_steps == 1
    assert time.step_size(1) == 20.0
    assert time.snapshot_times == (0.0, 20.0)


def test_time_control_rejects_misaligned_snapshot():
    """Test snapshot times before t_final must be whole numbers of steps."""
    with pytest.raises(ValidationError, match="multiple of dt"):
        TimeControl(dt=0.3, t_final=1.0, snapshot_times=(0.5, 1.0))


def test_time_control_rejects_unordered_snapshots():
    """Test snapshot times must increase and lie within the horizon."""
    with pytest.raises(ValidationError, match="strictly increasing"):
        TimeControl(dt=0.1, t_final=1.0, snapshot_times=(0.5, 0.2))
    with pytest.raises(ValidationError, match="outside"):
        TimeControl(dt=0.1, t_final=1.0, snapshot_times=(2.0,))


def test_model_params_defaults():
    """Test r defaults to 1 and the variant-specific fields to None."""
    params = ModelParams(variant=ModelVariant.TWO_EQ, d=0.5)

    assert params.r == 1.0
    assert params.D is None
    assert params.c is None
    assert params.diffusion == 1.0
    assert params.heterogeneous


def test_model_params_full_model():
    """Test the full model carries its own tumour diffusion."""
    params = ModelParams(variant=ModelVariant.FULL_MODEL, d=12.5, D=4e-5, c=70.0)

    assert params.diffusion == 4e-5
    assert not params.heterogeneous


@pytest.mark.parametrize(
    "fields",
    [
        {"variant": ModelVariant.FULL_MODEL, "d": 1.0, "D": 1e-4},
        {"variant": ModelVariant.TWO_EQ, "d": 1.0, "D": 1.0},
        {"variant": ModelVariant.EPSILON_SYSTEM, "d": 0.5},
        {"variant": ModelVariant.ONE_EQ, "d": -0.1},
        {"variant": ModelVariant.EPSILON_SYSTEM, "d": 0.5, "epsilon": 0.0},
    ],
)
def test_model_params_rejects_invalid_combinations(fields):
    """Test missing, forbidden and out-of-range parameters."""
    with pytest.raises(ValidationError):
        ModelParams(**fields)


def test_model_params_with_value():
    """Test replacing one parameter keeps the others."""
    params = ModelParams(variant=ModelVariant.EPSILON_SYSTEM, d=0.5, epsilon=1.0)
    relaxed = params.with_value("epsilon", 0.01)

    assert relaxed.epsilon == 0.01
    assert relaxed.d == 0.5
    assert params.epsilon == 1.0


def test_equilibria_heterogeneous():
    """Test E3 is the stable coexistence state for d < 1."""
    points = {e.label: e for e in equilibria(0.5)}

    assert points[EquilibriumLabel.E3].state == (0.5, 1.0)
    assert points[EquilibriumLabel.E3].stability is Stability.STABLE
    assert points[EquilibriumLabel.E2].stability is Stability.UNSTABLE
    assert points[EquilibriumLabel.E0].stability is Stability.UNSTABLE
    assert points[EquilibriumLabel.E1].stability is Stability.UNSTABLE


def test_equilibria_homogeneous():
    """Test E2 takes over for d > 1 and E3 leaves the physical range."""
    points = {e.label: e for e in equilibria(2.0)}

    assert points[EquilibriumLabel.E2].stability is Stability.STABLE
    assert points[EquilibriumLabel.E3].stability is Stability.UNSTABLE
    assert points[EquilibriumLabel.E3].state == (-1.0, 1.0)
    assert not points[EquilibriumLabel.E3].physical


def test_equilibria_degenerate_at_threshold():
    """Test E2 and E3 coincide and are degenerate at d = 1."""
    points = {e.label: e for e in equilibria(1.0)}

    assert points[EquilibriumLabel.E2].state == points[EquilibriumLabel.E3].state
    assert points[EquilibriumLabel.E2].stability is Stability.DEGENERATE
    assert points[EquilibriumLabel.E3].stability is Stability.DEGENERATE


@pytest.mark.parametrize("d", [0.0, 0.25, 0.5, 1.0, 2.0, 12.5])
def test_equilibria_zero_both_reactions(d):
    """Test every listed point is a stationary point of the reactions."""
    for point in equilibria(d):
        u, v = point.state
        assert u * (1.0 - u - d * v) == 0.0
        assert v * (1.0 - v) == 0.0


def test_equilibria_rejects_negative_d():
    """Test a negative death rate."""
    with pytest.raises(NegativeParameter):
        equilibria(-1.0)


def test_invaded_state():
    """Test the state left behind the front."""
    assert invaded_state(0.5) == (0.5, 1.0)
    assert invaded_state(2.0) == (0.0, 1.0)


@pytest.mark.parametrize("variant", [ModelVariant.TWO_EQ, ModelVariant.EPSILON_SYSTEM, ModelVariant.FULL_MODEL])
@pytest.mark.parametrize("d", [0.25, 1.0, 12.5])
def test_riemann_states_start_from_invaded_state(variant, d):
    """Test the left Riemann state is the invaded state for every variant storing u."""
    left, _ = riemann_states(variant, d)

    assert left[:2] == invaded_state(d)


def test_riemann_initial_two_fields(unit_grid):
    """Test cells left of the jump take the left state."""
    state = riemann_initial(unit_grid, (0.5, 1.0), (1.0, 0.0), 0.5)

    assert state.t == 0.0
    assert state.u is not None and state.w is None
    assert np.all(state.v[:100] == 1.0) and np.all(state.v[100:] == 0.0)
    assert np.all(state.u[:100] == 0.5) and np.all(state.u[100:] == 1.0)


def test_riemann_initial_field_counts(unit_grid):
    """Test one, two and three-field tuples."""
    one = riemann_initial(unit_grid, (1.0,), (0.0,), 0.5)
    three = riemann_initial(unit_grid, (0.0, 1.0, 1.0), (1.0, 0.0, 0.0), 0.5)

    assert list(one.fields()) == ["v"]
    assert list(three.fields()) == ["u", "v", "w"]


@pytest.mark.parametrize("x_jump", [0.0, 1.0, -3.0, 7.0])
def test_riemann_initial_rejects_jump_outside(unit_grid, x_jump):
    """Test the jump must lie strictly inside the domain."""
    with pytest.raises(JumpOutsideDomain):
        riemann_initial(unit_grid, (1.0,), (0.0,), x_jump)


def test_riemann_initial_rejects_mismatched_tuples(unit_grid):
    """Test left and right states must have the same length."""
    with pytest.raises(LengthMismatch):
        riemann_initial(unit_grid, (1.0, 0.0), (0.0,), 0.5)
    with pytest.raises(LengthMismatch):
        riemann_initial(unit_grid, (1.0,) * 4, (0.0,) * 4, 0.5)


def test_riemann_states_per_variant():
    """Test the default Riemann states put the invaded state behind the front."""
    assert riemann_states(ModelVariant.ONE_EQ, 0.5) == ((1.0,), (0.0,))
    assert riemann_states(ModelVariant.TWO_EQ, 0.5) == ((0.5, 1.0), (1.0, 0.0))
    assert riemann_states(ModelVariant.TWO_EQ, 2.0) == ((0.0, 1.0), (1.0, 0.0))
    assert riemann_states(ModelVariant.FULL_MODEL, 12.5) == ((0.0, 1.0, 1.0), (1.0, 0.0, 0.0))


def test_recover_healthy():
    """Test u = max(1 - d v, 0)."""
    v = np.array([0.0, 0.5, 1.0])

    np.testing.assert_array_equal(recover_healthy(v, 0.5), [1.0, 0.75, 0.5])
    np.testing.assert_array_equal(recover_healthy(v, 2.0), [1.0, 0.0, 0.0])


def test_field_state_arrays_are_read_only():
    """Test the state copies its input and cannot be mutated."""
    source = np.array([1.0, 0.0])
    state = FieldState(v=source)
    source[0] = 5.0

    assert state.v[0] == 1.0
    with pytest.raises(ValueError):
        state.v[0] = 2.0


def test_field_state_rejects_length_mismatch():
    """Test all stored fields must share the cell count."""
    with pytest.raises(ValidationError, match="shape"):
        FieldState(v=np.zeros(3), u=np.zeros(4))


def test_field_state_bounds_and_finiteness():
    """Test the density range and NaN checks."""
    good = FieldState(u=np.array([0.0, 1.0]), v=np.array([1.0, 0.0]))
    over = FieldState(u=np.array([0.0, 1.1]), v=np.array([1.0, 0.0]))
    nan = FieldState(v=np.array([np.nan, 0.0]))

    assert good.within_bounds() and good.is_finite()
    assert not over.within_bounds()
    assert not nan.is_finite()


def test_field_state_acid_is_not_bounded():
    """Test w above one does not count as out of range."""
    state = FieldState(u=np.zeros(2), v=np.ones(2), w=np.full(2, 3.0))

    assert state.within_bounds()

"""Tests for the tridiagonal solver."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from pydantic import ValidationError

from acidfront.errors import ZeroPivot
from acidfront.schemes import TridiagonalSystem, linalg, solve_tridiagonal


def _system(sub, diag, sup, rhs) -> TridiagonalSystem:
    return TridiagonalSystem(
        sub=np.asarray(sub, dtype=float),
        diag=np.asarray(diag, dtype=float),
        sup=np.asarray(sup, dtype=float),
        rhs=np.asarray(rhs, dtype=float),
    )


def test_identity_returns_rhs():
    """Test the identity system leaves the right-hand side unchanged."""
    rhs = np.array([3.0, -1.0, 2.5, 0.0])
    system = _system(np.zeros(3), np.ones(4), np.zeros(3), rhs)

    np.testing.assert_array_equal(solve_tridiagonal(system), rhs)


def test_second_difference_example():
    """Test the classic [-1, 2, -1] system with a known solution."""
    system = _system([-1.0, -1.0], [2.0, 2.0, 2.0], [-1.0, -1.0], [1.0, 0.0, 1.0])

    np.testing.assert_allclose(solve_tridiagonal(system), [1.0, 1.0, 1.0], atol=1e-15)


def test_single_unknown():
    """Test a 1x1 system."""
    system = _system([], [4.0], [], [2.0])

    np.testing.assert_allclose(solve_tridiagonal(system), [0.5])


def test_zero_pivot_raises():
    """Test a singular system is reported instead of returning garbage."""
    system = _system([0.0, 0.0], [0.0, 1.0, 1.0], [0.0, 0.0], [1.0, 1.0, 1.0])

    with pytest.raises(ZeroPivot, match="3x3"):
        solve_tridiagonal(system)


def test_relative_residual():
    """Test the residual is scaled by |A| |x| + |rhs|."""
    system = _system([-1.0, -1.0], [2.0, 2.0, 2.0], [-1.0, -1.0], [1.0, 0.0, 1.0])

    assert system.relative_residual(np.ones(3)) == 0.0
    assert system.relative_residual(np.zeros(3)) == 1.0


def test_inaccurate_solution_raises(monkeypatch):
    """Test a solution missing A x = rhs is reported as a numerical failure."""
    monkeypatch.setattr(linalg, "solve_banded", lambda *args, **kwargs: np.zeros(3))
    system = _system([-1.0, -1.0], [2.0, 2.0, 2.0], [-1.0, -1.0], [1.0, 0.0, 1.0])

    with pytest.raises(ZeroPivot, match=r"relative residual 1\.000e\+00"):
        solve_tridiagonal(system)


def test_non_finite_rhs_passes_through():
    """Test NaN input comes back as NaN for the caller's state check."""
    system = _system([0.0], [1.0, 1.0], [0.0], [np.nan, 1.0])

    x = solve_tridiagonal(system)

    assert np.isnan(x[0]) and x[1] == 1.0


def test_inconsistent_diagonals_rejected():
    """Test the diagonals must have lengths n - 1, n, n - 1."""
    with pytest.raises(ValidationError, match="inconsistent diagonals"):
        _system([1.0], [1.0, 1.0, 1.0], [1.0, 1.0], [0.0, 0.0, 0.0])


def test_dense_and_matvec_agree():
    """Test the dense form and the banded product describe the same matrix."""
    system = _system([1.0, 2.0], [4.0, 5.0, 6.0], [7.0, 8.0], [0.0, 0.0, 0.0])
    x = np.array([1.0, -2.0, 3.0])

    np.testing.assert_array_equal(system.dense() @ x, system.matvec(x))
    assert system.dense()[1, 0] == 1.0
    assert system.dense()[0, 1] == 7.0


@settings(max_examples=50, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=40),
    data=st.data(),
)
def test_matches_dense_solve_for_dominant_systems(n, data):
    """Test against numpy on random diagonally dominant systems."""
    values = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
    sub = data.draw(arrays(np.float64, n - 1, elements=values))
    sup = data.draw(arrays(np.float64, n - 1, elements=values))
    rhs = data.draw(arrays(np.float64, n, elements=values))
    diag = 3.0 + data.draw(arrays(np.float64, n, elements=st.floats(min_value=0.0, max_value=5.0)))
    system = _system(sub, diag, sup, rhs)

    x = solve_tridiagonal(system)

    np.testing.assert_allclose(x, np.linalg.solve(system.dense(), rhs), atol=1e-12)
    assert system.residual(x) < 1e-12

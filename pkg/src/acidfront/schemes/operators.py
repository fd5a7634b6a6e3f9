"""Finite-volume spatial operators on a uniform mesh.

All operators close the boundary with zero-flux ghost cells: the ghost value
mirrors the boundary cell, so the boundary face carries no flux and the
discrete divergence sums to zero over the domain.

Degenerate diffusion d/dx[(1 - u) dv/dx] is discretised face by face with the
interface average 1 - (u_i + u_{i+1})/2 times the two-point gradient, which on
a uniform mesh expands to

    (1 - u_i)(v_{i+1} - 2 v_i + v_{i-1})
      - 1/2 (v_{i+1} - v_i)(u_{i+1} - u_i)
      - 1/2 (v_i - v_{i-1})(u_i - u_{i-1})

divided by dx^2.
"""

import numpy as np

from ..errors import LengthMismatch
from ..models import Vector
from .linalg import TridiagonalSystem


def with_ghosts(values: Vector) -> Vector:
    """Pad with one mirrored ghost cell on each side."""
    padded = np.empty(values.shape[0] + 2, dtype=np.float64)
    padded[1:-1] = values
    padded[0] = values[0]
    padded[-1] = values[-1]
    return padded


def face_mobility(u: Vector) -> Vector:
    """Interior-face coefficients 1 - (u_i + u_{i+1})/2, length n - 1."""
    return 1.0 - 0.5 * (u[:-1] + u[1:])


def degenerate_flux_divergence(u: Vector, v: Vector, dx: float) -> Vector:
    """
    Discrete d/dx[(1 - u) dv/dx] per cell.

    Args:
        u: Healthy density per cell
        v: Tumour density per cell
        dx: Cell width

    Returns:
        Per-cell divergence of the degenerate flux

    Raises:
        LengthMismatch: If u and v differ in length or have fewer than 3 cells
    """
    if u.shape != v.shape:
        raise LengthMismatch(f"u has shape {u.shape}, v has shape {v.shape}")
    if v.shape[0] < 3:
        raise LengthMismatch(f"need at least 3 cells, got {v.shape[0]}")

    up = with_ghosts(u)
    vp = with_ghosts(v)
    flux = (1.0 - 0.5 * (up[:-1] + up[1:])) * np.diff(vp)
    result: Vector = np.diff(flux) / dx**2
    return result


def laplacian(v: Vector, dx: float) -> Vector:
    """Discrete second derivative with zero-flux ghosts."""
    result: Vector = np.diff(np.diff(with_ghosts(v))) / dx**2
    return result


def porous_flux_divergence(v: Vector, dx: float) -> Vector:
    """
    Discrete d/dx(v dv/dx) per cell.

    The face value is the mean of the neighbours, so per cell this is
    [v_i/2 (v_{i+1} - 2 v_i + v_{i-1}) + v_{i+1}/2 (v_{i+1} - v_i)
    - v_{i-1}/2 (v_i - v_{i-1})] / dx^2.
    """
    vp = with_ghosts(v)
    flux = 0.5 * (vp[:-1] + vp[1:]) * np.diff(vp)
    result: Vector = np.diff(flux) / dx**2
    return result


def implicit_diffusion_system(mobility: Vector, rhs: Vector, lam: float) -> TridiagonalSystem:
    """
    Backward-Euler system (I - lam * div(a grad)) x = rhs.

    Args:
        mobility: Interior-face coefficients a_{i+1/2}, length n - 1
        rhs: Explicit part of the update, length n
        lam: D * dt / dx^2

    Returns:
        Tridiagonal system; boundary faces carry a = 0
    """
    n = rhs.shape[0]
    if mobility.shape != (n - 1,):
        raise LengthMismatch(f"mobility has shape {mobility.shape}, expected ({n - 1},)")

    off = -lam * mobility
    diag = np.ones(n, dtype=np.float64)
    diag[:-1] += lam * mobility
    diag[1:] += lam * mobility
    return TridiagonalSystem(sub=off, diag=diag, sup=off.copy(), rhs=rhs)

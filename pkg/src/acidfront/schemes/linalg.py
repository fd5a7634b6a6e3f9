"""Tridiagonal linear systems for the implicit diffusion solves."""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from scipy.linalg import LinAlgError, solve_banded

from ..errors import LengthMismatch, ZeroPivot
from ..models import Array, Vector

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-8


class TridiagonalSystem(BaseModel):
    """
    A x = rhs with A given by its three diagonals.

    sub[i] is A[i+1, i], sup[i] is A[i, i+1].
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    sub: Array
    diag: Array
    sup: Array
    rhs: Array

    @model_validator(mode="after")
    def check_lengths(self) -> "TridiagonalSystem":
        n = self.diag.shape[0]
        if self.rhs.shape != (n,) or self.sub.shape != (n - 1,) or self.sup.shape != (n - 1,):
            raise LengthMismatch(
                f"inconsistent diagonals: sub={self.sub.shape}, diag={self.diag.shape}, "
                f"sup={self.sup.shape}, rhs={self.rhs.shape}"
            )
        return self

    @property
    def size(self) -> int:
        return int(self.diag.shape[0])

    def banded(self) -> Vector:
        """(3, n) band storage as expected by LAPACK gtsv/gbsv."""
        ab = np.zeros((3, self.size), dtype=np.float64)
        ab[0, 1:] = self.sup
        ab[1, :] = self.diag
        ab[2, :-1] = self.sub
        return ab

    def dense(self) -> Vector:
        """Full matrix, for small systems and checks."""
        return np.diag(self.diag) + np.diag(self.sub, -1) + np.diag(self.sup, 1)

    def matvec(self, x: Vector) -> Vector:
        y = self.diag * x
        y[:-1] += self.sup * x[1:]
        y[1:] += self.sub * x[:-1]
        return y

    def residual(self, x: Vector) -> float:
        """Infinity norm of A x - rhs."""
        return float(np.max(np.abs(self.matvec(x) - self.rhs)))

    def relative_residual(self, x: Vector) -> float:
        """Residual scaled by |A| |x| + |rhs| in the infinity norm."""
        rows = np.abs(self.diag)
        rows[:-1] += np.abs(self.sup)
        rows[1:] += np.abs(self.sub)
        scale = float(np.max(rows)) * float(np.max(np.abs(x))) + float(np.max(np.abs(self.rhs)))
        residual = self.residual(x)
        return residual / scale if scale > 0 else residual


def solve_tridiagonal(system: TridiagonalSystem) -> Vector:
    """
    Solve a tridiagonal system.

    Args:
        system: Diagonals and right-hand side

    Returns:
        Solution vector x

    Raises:
        ZeroPivot: If elimination meets a singular pivot or the solution
            misses A x = rhs by more than RESIDUAL_TOLERANCE (relative)
    """
    try:
        x: Vector = solve_banded((1, 1), system.banded(), system.rhs, check_finite=False)
    except (LinAlgError, ValueError) as e:
        raise ZeroPivot(f"tridiagonal elimination failed on a {system.size}x{system.size} system: {e}") from e

    relative = system.relative_residual(x)
    # Non-finite inputs are left to the state check of the caller
    finite = all(np.all(np.isfinite(a)) for a in (system.sub, system.diag, system.sup, system.rhs))
    if finite and not relative <= RESIDUAL_TOLERANCE:
        raise ZeroPivot(
            f"tridiagonal solve on a {system.size}x{system.size} system left relative residual "
            f"{relative:.3e} (tolerance {RESIDUAL_TOLERANCE:g})"
        )
    logger.debug(f"Tridiagonal solve n={system.size} relative residual={relative:.3e}")
    return x

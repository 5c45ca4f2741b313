from functools import reduce
from math import prod

import numpy as np

from config import config
from errors import ArgumentError, DefinitenessError, SingularPreconditionerError
from errors import check_dense_cap
from toeplitz_ops import from_grid, to_grid


class Preconditioner:
    # Base class for everything PCG and the spectral tools can precondition with.
    # P^{-1} = H H^T; subclasses provide the solve and the two half solves on grids.

    key = None
    definite = True

    def __init__(self, dims):
        self.dims = tuple(int(n) for n in dims)
        self.size = prod(self.dims)

    @classmethod
    def from_system(cls, system, **options):
        raise NotImplementedError

    def solve_grid(self, grid):
        raise NotImplementedError

    def half_grid(self, grid):
        raise NotImplementedError

    def half_transpose_grid(self, grid):
        return self.half_grid(grid)

    def apply_inverse(self, r) -> np.ndarray:
        return from_grid(self.solve_grid(to_grid(r, self.dims)), self.dims)

    def apply_inverse_half(self, x) -> np.ndarray:
        return from_grid(self.half_grid(to_grid(x, self.dims)), self.dims)

    def apply_inverse_half_transpose(self, x) -> np.ndarray:
        return from_grid(self.half_transpose_grid(to_grid(x, self.dims)), self.dims)

    def dense_inverse(self, cap: int = None) -> np.ndarray:
        check_dense_cap(self.size, config.dense_cap if cap is None else cap)
        return self.apply_inverse(np.eye(self.size))


def apply_inverse(P: Preconditioner, r) -> np.ndarray:
    r = np.asarray(r)
    if r.ndim != 1 or r.shape[0] != P.size:
        raise ArgumentError(
            f"Residual length {r.shape} does not match preconditioner order {P.size}"
        )
    return P.apply_inverse(r)


def kron_sum_eigenvalues(per_level) -> np.ndarray:
    """lambda_{j_1..j_m} = sum_i per_level[i][j_i]."""
    return reduce(np.add.outer, [np.asarray(v, dtype=np.float64) for v in per_level])


class DiagonalizedPreconditioner(Preconditioner):
    """P = F^{-1} diag(eigenvalues) F for a separable fast transform F."""

    def __init__(self, eigenvalues):
        eigenvalues = np.asarray(eigenvalues, dtype=np.float64)
        super().__init__(eigenvalues.shape)
        self.eigenvalues = eigenvalues
        self.levels = eigenvalues.ndim

        scale = np.max(np.abs(eigenvalues))
        if scale == 0.0 or np.min(np.abs(eigenvalues)) <= config.singular_tol * scale:
            raise SingularPreconditionerError(
                f"{self.key} preconditioner has a zero eigenvalue"
            )
        self.definite = bool(eigenvalues.min() > 0)

    def forward(self, grid):
        raise NotImplementedError

    def backward(self, grid):
        raise NotImplementedError

    def _diagonal(self, values, grid):
        if grid.ndim > self.levels:
            return values[..., np.newaxis]
        return values

    def solve_grid(self, grid):
        return self.backward(self.forward(grid) / self._diagonal(self.eigenvalues, grid))

    def half_grid(self, grid):
        if not self.definite:
            raise DefinitenessError(
                f"{self.key} preconditioner is indefinite and has no real square root"
            )
        root = np.sqrt(self.eigenvalues)
        return self.backward(self.forward(grid) / self._diagonal(root, grid))

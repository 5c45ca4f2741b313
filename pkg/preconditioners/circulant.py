"""
Strang circulant preconditioners: c_k = t_k for k <= n/2 and t_{n-k} beyond,
per level for Kronecker sums, as an m-level Strang tensor otherwise.
"""

import numpy as np
import scipy.fft

from errors import ArgumentError
from preconditioner import DiagonalizedPreconditioner, kron_sum_eigenvalues
from toeplitz_ops import KronSumOperator, MultilevelToeplitz, SymToeplitz1D


def _strang_index(n):
    if n < 2:
        raise ArgumentError(f"Strang circulant needs order at least 2, got {n}")
    k = np.arange(n)
    return np.where(k <= n // 2, k, n - k)


def strang_column(column) -> np.ndarray:
    column = np.asarray(column, dtype=np.float64)
    return column[_strang_index(column.size)]


def strang_tensor(coefficients) -> np.ndarray:
    coefficients = np.asarray(coefficients, dtype=np.float64)
    return coefficients[np.ix_(*[_strang_index(n) for n in coefficients.shape])]


class CirculantPreconditioner(DiagonalizedPreconditioner):
    key = "circulant"

    def __init__(self, eigenvalues):
        super().__init__(eigenvalues)
        if not self.definite:
            print(
                f"⚠️  Strang circulant preconditioner is indefinite "
                f"(smallest eigenvalue {self.eigenvalues.min():.3e})"
            )

    @classmethod
    def from_system(cls, system, **options):
        return build_strang(system.operator)

    def forward(self, grid):
        return scipy.fft.fftn(grid, axes=tuple(range(self.levels)))

    def backward(self, grid):
        return scipy.fft.ifftn(grid, axes=tuple(range(self.levels))).real


def build_strang(source) -> CirculantPreconditioner:
    if isinstance(source, KronSumOperator):
        return CirculantPreconditioner(
            kron_sum_eigenvalues(
                [scipy.fft.fft(strang_column(c)).real for c in source.weighted_columns()]
            )
        )
    if isinstance(source, MultilevelToeplitz):
        return CirculantPreconditioner(
            scipy.fft.fftn(strang_tensor(source.coefficients)).real
        )
    if isinstance(source, SymToeplitz1D):
        source = source.column
    column = np.asarray(source, dtype=np.float64)
    if column.ndim != 1:
        raise ArgumentError("Expected a first column, a Kronecker sum or a tensor")
    return CirculantPreconditioner(scipy.fft.fft(strang_column(column)).real)

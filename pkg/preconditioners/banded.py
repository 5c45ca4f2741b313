"""
Banded preconditioner for one-dimensional problems: the symmetric Toeplitz
truncation b_0..b_{k-1} plus a diagonal correction, factored once with a
banded Cholesky decomposition.
"""

import numpy as np
import scipy.linalg

from config import config
from errors import ArgumentError, DefinitenessError, UsageError
from preconditioner import Preconditioner
from toeplitz_ops import KronSumOperator


class BandedPreconditioner(Preconditioner):
    key = "banded"

    def __init__(self, column, bandwidth: int = None):
        column = np.asarray(column, dtype=np.float64)
        n = column.size
        k = config.banded_bandwidth if bandwidth is None else bandwidth
        if not 1 <= k <= n:
            raise ArgumentError(f"Bandwidth must lie in [1, {n}], got {k}")
        super().__init__((n,))
        self.column = column
        self.bandwidth = k

        # Lower band storage: band[d, j] = B[j + d, j]
        band = np.zeros((k, n))
        for d in range(k):
            band[d, : n - d] = column[d]
        # Row i carries 2 * (b_k + ... + b_i) on its diagonal
        self.correction = np.zeros(n)
        self.correction[k:] = 2.0 * np.cumsum(column[k:])
        band[0] += self.correction
        self.band = band

        try:
            self.factor = scipy.linalg.cholesky_banded(band, lower=True)
        except np.linalg.LinAlgError as e:
            raise DefinitenessError(
                f"Banded preconditioner with bandwidth {k} is not positive definite"
            ) from e

        # L^T in upper band storage for the half solve
        self.factor_transpose = np.zeros_like(self.factor)
        for d in range(k):
            self.factor_transpose[k - 1 - d, d:] = self.factor[d, : n - d]

    @classmethod
    def from_system(cls, system, bandwidth: int = None, **options):
        operator = system.operator
        if not isinstance(operator, KronSumOperator) or operator.levels != 1:
            raise UsageError("The banded preconditioner supports one-dimensional problems only")
        return cls(operator.weighted_columns()[0], bandwidth)

    def solve_grid(self, grid):
        return scipy.linalg.cho_solve_banded((self.factor, True), grid)

    def half_grid(self, grid):
        # H = L^{-T}
        return scipy.linalg.solve_banded((0, self.bandwidth - 1), self.factor_transpose, grid)

    def half_transpose_grid(self, grid):
        return scipy.linalg.solve_banded((self.bandwidth - 1, 0), self.factor, grid)

    def dense(self):
        first_row = np.zeros(self.size)
        first_row[: self.bandwidth] = self.column[: self.bandwidth]
        return scipy.linalg.toeplitz(first_row) + np.diag(self.correction)


def build_banded(column, bandwidth: int = None) -> BandedPreconditioner:
    return BandedPreconditioner(column, bandwidth)

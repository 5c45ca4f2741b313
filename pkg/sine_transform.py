"""
Orthonormal DST-I, tau matrices and fast tau solves.

tau(T_n) = T_n - H_n is diagonalized by the sine matrix
[S_n]_{jk} = sqrt(2/(n+1)) sin(pi j k/(n+1)), which is symmetric and its
own inverse, so tau(T_n)^{-1} v = S_n diag(sigma)^{-1} S_n v.
"""

from dataclasses import dataclass

import numpy as np
import scipy.fft
import scipy.linalg

from config import config
from errors import ArgumentError, SingularPreconditionerError, check_dense_cap


@dataclass(frozen=True)
class SineTransformPlan:
    n: int
    workers: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ArgumentError(f"Transform order must be at least 1, got {self.n}")

    def apply(self, x, axis: int = 0) -> np.ndarray:
        return scipy.fft.dst(x, type=1, norm="ortho", axis=axis, workers=self.workers)

    def dense(self) -> np.ndarray:
        j = np.arange(1, self.n + 1)
        return np.sqrt(2.0 / (self.n + 1)) * np.sin(np.pi * np.outer(j, j) / (self.n + 1))


@dataclass(frozen=True)
class TauEigenvalues:
    n: int
    sigma: np.ndarray

    def check_nonsingular(self, tol: float = None):
        tol = config.singular_tol if tol is None else tol
        scale = np.max(np.abs(self.sigma))
        if scale == 0.0 or np.any(np.abs(self.sigma) <= tol * scale):
            raise SingularPreconditionerError(
                f"tau matrix of order {self.n} has a zero eigenvalue "
                f"(min |sigma| = {np.min(np.abs(self.sigma)):.3e})"
            )


def dst_apply(plan: SineTransformPlan, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim not in (1, 2) or x.shape[0] != plan.n:
        raise ArgumentError(f"Expected length {plan.n}, got shape {x.shape}")
    return plan.apply(x)


def dst_apply_levels(grid: np.ndarray, levels: int, workers: int = 1) -> np.ndarray:
    """S_{n_1} (x) ... (x) S_{n_m} applied to a grid whose first `levels` axes are levels."""
    return scipy.fft.dstn(
        grid, type=1, norm="ortho", axes=tuple(range(levels)), workers=workers
    )


def hankel_correction(column) -> np.ndarray:
    """
    H_n with antidiagonals [t_2 .. t_{n-1}, 0, 0, 0, t_{n-1} .. t_2]; the
    order-1 and order-2 corrections vanish.
    """
    t = np.asarray(column, dtype=np.float64)
    n = t.size
    tail = t[2:]
    antidiagonals = np.concatenate([tail, np.zeros(3), tail[::-1]])[: 2 * n - 1]
    return scipy.linalg.hankel(antidiagonals[:n], antidiagonals[n - 1 :])


def tau_dense(T, cap: int = None) -> np.ndarray:
    check_dense_cap(T.n, config.dense_cap if cap is None else cap)
    return T.dense() - hankel_correction(T.column)


def tau_eigenvalue_tensor(coefficients) -> np.ndarray:
    """
    sigma_j = sum_k (prod_i mu(k_i)) t_k prod_i cos(j_i k_i pi / (n_i + 1)),
    mu(0) = 1 and mu(k > 0) = 2, for j_i = 1..n_i. One DCT-I per level on the
    tensor padded by two zeros along every axis.
    """
    coefficients = np.asarray(coefficients, dtype=np.float64)
    if coefficients.size == 0:
        raise ArgumentError("Coefficient tensor must be non-empty")
    padded = np.pad(coefficients, [(0, 2)] * coefficients.ndim)
    transformed = scipy.fft.dctn(padded, type=1)
    return transformed[tuple(slice(1, n + 1) for n in coefficients.shape)]


def tau_eigenvalues(column) -> TauEigenvalues:
    column = np.asarray(column, dtype=np.float64)
    if column.ndim != 1 or column.size < 1:
        raise ArgumentError("A first column needs at least one entry")
    return TauEigenvalues(n=column.size, sigma=tau_eigenvalue_tensor(column))


def tau_solve_1d(eigs: TauEigenvalues, plan: SineTransformPlan, b) -> np.ndarray:
    if eigs.n != plan.n:
        raise ArgumentError(f"Eigenvalue order {eigs.n} does not match plan order {plan.n}")
    eigs.check_nonsingular()
    b = np.asarray(b, dtype=np.float64)
    sigma = eigs.sigma if b.ndim == 1 else eigs.sigma[:, np.newaxis]
    return plan.apply(dst_apply(plan, b) / sigma)

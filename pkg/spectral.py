"""
Extreme eigenvalues and condition numbers of preconditioned operators.

Every preconditioner factors as P^{-1} = H H^T, so P^{-1} A is similar to the
symmetric operator H^T A H. Small problems are solved densely; large ones use
Lanczos with full reorthogonalization on the same symmetric operator.
"""

from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional, Tuple

import numpy as np
import scipy.linalg

from config import config, interior_points, SIZE_CONVENTIONS
from errors import ArgumentError, DefinitenessError, check_dense_cap
from gl_kernel import riesz_first_column
from krylov import as_matvec
from preconditioners.tau_kron import TauKronPreconditioner
from run_helpers.seed import random_vector
from sine_transform import hankel_correction, tau_dense
from toeplitz_ops import KronSumOperator, SymToeplitz1D

SPECTRUM_METHODS = ["dense", "lanczos"]

# Columns applied at once when assembling a dense symmetrized operator
DENSE_CHUNK = 256


@dataclass
class SpectrumReport:
    lambda_min: float
    lambda_max: float
    method: str
    converged: bool = True
    residuals: Tuple[float, float] = (0.0, 0.0)
    iterations: int = 0
    eigenvalues: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def condition_number(self) -> float:
        return self.lambda_max / self.lambda_min


def symmetrized_operator(A, P=None):
    """X -> H^T A H X for P^{-1} = H H^T; plain A when P is None."""
    matvec = as_matvec(A)
    if P is None:
        return matvec
    if not P.definite:
        raise DefinitenessError(
            f"{P.key} preconditioner is indefinite; its spectrum is not defined here"
        )
    return lambda x: P.apply_inverse_half_transpose(matvec(P.apply_inverse_half(x)))


def dense_preconditioned_spectrum(A, P=None, cap: int = None) -> np.ndarray:
    size = int(A.shape[0])
    check_dense_cap(size, config.dense_cap if cap is None else cap)
    apply = symmetrized_operator(A, P)

    matrix = np.empty((size, size))
    identity = np.eye(size)
    for begin in range(0, size, DENSE_CHUNK):
        end = min(begin + DENSE_CHUNK, size)
        matrix[:, begin:end] = apply(identity[:, begin:end])
    matrix = 0.5 * (matrix + matrix.T)
    return scipy.linalg.eigvalsh(matrix)


def dense_spectrum_report(A, P=None, cap: int = None) -> SpectrumReport:
    eigenvalues = dense_preconditioned_spectrum(A, P, cap)
    return SpectrumReport(
        lambda_min=float(eigenvalues[0]),
        lambda_max=float(eigenvalues[-1]),
        method="dense",
        eigenvalues=eigenvalues,
    )


def lanczos_extremes(
    A, P=None, iters: int = None, tol: float = None, seed: int = 0
) -> SpectrumReport:
    iters = config.lanczos_max_iter if iters is None else iters
    tol = config.lanczos_tol if tol is None else tol
    if iters < 1:
        raise ArgumentError(f"Lanczos needs at least one iteration, got {iters}")
    if tol <= 0:
        raise ArgumentError(f"Lanczos tolerance must be positive, got {tol}")
    apply = symmetrized_operator(A, P)
    size = int(A.shape[0])
    steps = min(iters, size)

    start = random_vector(seed, size)
    basis = np.zeros((size, steps + 1))
    basis[:, 0] = start / np.linalg.norm(start)
    alpha = np.zeros(steps)
    beta = np.zeros(steps)

    converged = False
    for i in range(steps):
        q = basis[:, i]
        w = apply(q)
        if i > 0:
            w -= beta[i - 1] * basis[:, i - 1]
        alpha[i] = q @ w
        w -= alpha[i] * q
        # double Gram-Schmidt reorthogonalization
        w -= basis[:, : i + 1] @ (basis[:, : i + 1].T @ w)
        w -= basis[:, : i + 1] @ (basis[:, : i + 1].T @ w)
        beta[i] = np.linalg.norm(w)

        ritz, vectors = scipy.linalg.eigh_tridiagonal(alpha[: i + 1], beta[:i])
        residuals = np.abs(beta[i] * vectors[-1, [0, -1]])
        scale = np.maximum(1.0, np.abs(ritz[[0, -1]]))
        if np.all(residuals < tol * scale) or beta[i] <= np.finfo(float).eps:
            converged = True
            break
        basis[:, i + 1] = w / beta[i]

    if not converged:
        print(
            f"⚠️  Lanczos stopped after {i + 1} iterations with Ritz residuals "
            f"{residuals[0]:.2e}, {residuals[1]:.2e}"
        )
    return SpectrumReport(
        lambda_min=float(ritz[0]),
        lambda_max=float(ritz[-1]),
        method="lanczos",
        converged=converged,
        residuals=(float(residuals[0]), float(residuals[1])),
        iterations=i + 1,
    )


def hankel_ratio_spectrum(column, cap: int = None) -> np.ndarray:
    """Eigenvalues of tau(T)^{-1} H, from the pencil (H, tau(T))."""
    T = SymToeplitz1D(column)
    tau = tau_dense(T, cap)
    return scipy.linalg.eigh(hankel_correction(T.column), tau, eigvals_only=True)


class SizeConventionReport(NamedTuple):
    chosen: Optional[str]
    values: Dict[str, float]


def resolve_size_convention(
    alpha: float, size: int, expected: float, tol: float = 1e-3
) -> SizeConventionReport:
    """
    Smallest eigenvalue of tau(G)^{-1} G under each way of reading a published
    grid size, and the convention that reproduces `expected`.
    """
    values = {}
    for convention in SIZE_CONVENTIONS:
        n = interior_points(size, convention)
        operator = KronSumOperator.from_columns([riesz_first_column(alpha, n).t], [1.0])
        P = TauKronPreconditioner([(alpha, n, 1.0)])
        if n <= config.dense_cap:
            report = dense_spectrum_report(operator, P)
        else:
            report = lanczos_extremes(operator, P)
        values[convention] = report.lambda_min

    best = min(values, key=lambda c: abs(values[c] - expected))
    chosen = best if abs(values[best] - expected) < tol else None
    return SizeConventionReport(chosen=chosen, values=values)

"""
Preconditioned conjugate gradients over matrix-free operators.

The stopping test uses the recurrence residual ||r_q|| / ||r_0|| < tol; the
true residual is recomputed once at the end and stored alongside.
"""

import time
from dataclasses import dataclass, field
from typing import List

import numpy as np

from config import config
from errors import ArgumentError, DefinitenessError, NumericalBreakdownError


@dataclass
class SolveReport:
    iterations: int
    residual_history: List[float]
    converged: bool
    wall_time: float
    solution: np.ndarray = field(repr=False)
    true_residual: float = float("nan")

    @property
    def final_residual(self) -> float:
        return self.residual_history[-1]


def as_matvec(A):
    if hasattr(A, "matvec"):
        return A.matvec
    A = np.asarray(A, dtype=np.float64)
    return lambda x: A @ x


def _order(A) -> int:
    return int(A.shape[0])


def pcg(
    A,
    P=None,
    b=None,
    tol: float = None,
    max_iter: int = None,
    x0=None,
    check_definite: bool = True,
) -> SolveReport:
    tol = config.pcg_tol if tol is None else tol
    max_iter = config.pcg_max_iter if max_iter is None else max_iter
    if tol <= 0:
        raise ArgumentError(f"Tolerance must be positive, got {tol}")
    if max_iter < 0:
        raise ArgumentError(f"Iteration cap must be non-negative, got {max_iter}")

    b = np.asarray(b, dtype=np.float64)
    if b.ndim != 1 or b.shape[0] != _order(A):
        raise ArgumentError(
            f"Right-hand side length {b.shape} does not match operator order {_order(A)}"
        )
    matvec = as_matvec(A)
    precondition = P.apply_inverse if P is not None else np.copy

    start = time.perf_counter()
    if x0 is None:
        x = np.zeros_like(b)
        r = b.copy()
    else:
        x = np.array(x0, dtype=np.float64)
        r = b - matvec(x)

    r0 = np.linalg.norm(r)
    if r0 == 0.0:
        return SolveReport(0, [1.0], True, time.perf_counter() - start, x, 0.0)

    def preconditioned(r):
        z = precondition(r)
        rz = float(r @ z)
        if not np.isfinite(rz):
            raise NumericalBreakdownError("Preconditioned residual is not finite")
        if check_definite and rz < 0:
            raise DefinitenessError(
                f"Preconditioner is indefinite: <r, P^-1 r> = {rz:.3e}"
            )
        return z, rz

    history = [1.0]
    z, rz = preconditioned(r)
    p = z.copy()
    converged = False
    iterations = 0
    while iterations < max_iter:
        Ap = matvec(p)
        pAp = float(p @ Ap)
        if not np.isfinite(pAp) or pAp <= 0:
            raise NumericalBreakdownError(
                f"CG breakdown at iteration {iterations + 1}: <p, A p> = {pAp:.3e}"
            )
        step = rz / pAp
        x += step * p
        r -= step * Ap
        iterations += 1

        relative = np.linalg.norm(r) / r0
        if not np.isfinite(relative):
            raise NumericalBreakdownError(
                f"Residual became non-finite at iteration {iterations}"
            )
        history.append(float(relative))
        if relative < tol:
            converged = True
            break

        z, rz_next = preconditioned(r)
        if rz_next == 0.0:
            raise NumericalBreakdownError(
                f"CG breakdown at iteration {iterations}: <r, P^-1 r> vanished"
            )
        p = z + (rz_next / rz) * p
        rz = rz_next

    true_residual = float(np.linalg.norm(b - matvec(x)) / r0)
    return SolveReport(
        iterations=iterations,
        residual_history=history,
        converged=converged,
        wall_time=time.perf_counter() - start,
        solution=x,
        true_residual=true_residual,
    )

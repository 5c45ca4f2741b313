"""
Grünwald–Letnikov coefficients and the first column of the 1D Riesz
stiffness matrix G_n^(alpha).
"""

from dataclasses import dataclass

import numpy as np

from errors import ArgumentError, DomainError


@dataclass(frozen=True)
class GLSequence:
    alpha: float
    coeffs: np.ndarray

    def __len__(self):
        return len(self.coeffs)

    def partial_sums(self) -> np.ndarray:
        return np.cumsum(self.coeffs)


@dataclass(frozen=True)
class RieszColumn:
    alpha: float
    t: np.ndarray

    @property
    def n(self) -> int:
        return len(self.t)

    def symbol_sum(self) -> float:
        """t_0 + 2 * sum_{j>=1} t_j, positive for every alpha in (1, 2)."""
        return float(self.t[0] + 2.0 * self.t[1:].sum())


def check_alpha(alpha):
    if not 1.0 < alpha < 2.0:
        raise DomainError(f"Fractional order must lie in (1, 2), got {alpha}")


def riesz_constant(alpha: float) -> float:
    """c(alpha) = -1 / (2 cos(alpha pi / 2)), positive on (1, 2)."""
    check_alpha(alpha)
    return -1.0 / (2.0 * np.cos(alpha * np.pi / 2.0))


def gl_recurrence(alpha: float, length: int) -> np.ndarray:
    # Unchecked; the integer orders 1 and 2 are reachable only from here
    coeffs = np.empty(length, dtype=np.float64)
    coeffs[0] = 1.0
    for k in range(1, length):
        coeffs[k] = (1.0 - (alpha + 1.0) / k) * coeffs[k - 1]
    return coeffs


def gl_coefficients(alpha: float, length: int) -> GLSequence:
    check_alpha(alpha)
    if length < 1:
        raise ArgumentError(f"Sequence length must be at least 1, got {length}")
    return GLSequence(alpha=alpha, coeffs=gl_recurrence(alpha, length))


def riesz_first_column(alpha: float, n: int) -> RieszColumn:
    if n < 1:
        raise ArgumentError(f"Matrix order must be at least 1, got {n}")
    g = gl_coefficients(alpha, n + 2).coeffs

    t = np.empty(n, dtype=np.float64)
    t[0] = -2.0 * g[1]
    if n > 1:
        t[1] = -(g[0] + g[2])
        t[2:] = -g[3 : n + 1]
    return RieszColumn(alpha=alpha, t=t)


def gl_tail_sum(alpha: float, length: int) -> float:
    """|sum_{k=0}^{length} g_k|, which decays to zero as length grows."""
    return float(abs(gl_coefficients(alpha, length + 1).coeffs.sum()))

"""
Generating functions (symbols) of the Toeplitz matrices used here and their
Fourier coefficients.

Symbols are even functions on [-pi, pi]. One-dimensional symbols are
described by `Symbol1D`, multi-dimensional ones by `SymbolMulti`, which
combines per-level symbols either as a weighted sum or as a sum minus a
product of per-level factors.
"""

from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
import scipy.fft

from config import config
from errors import AccuracyError, ArgumentError, DomainError
from gl_kernel import check_alpha, riesz_constant

SYMBOL_KINDS = ["riesz", "abs_power", "clipped_power", "custom"]


def _check_theta(theta):
    theta = np.asarray(theta, dtype=np.float64)
    if np.any(np.abs(theta) > np.pi):
        raise DomainError("Symbols are evaluated on [-pi, pi] only")
    return theta


def eval_riesz_symbol(alpha, theta):
    check_alpha(alpha)
    theta = np.abs(_check_theta(theta))
    value = (
        -(2.0 ** (alpha + 1.0))
        * np.sin(theta / 2.0) ** alpha
        * np.cos(alpha / 2.0 * (np.pi - theta) + theta)
    )
    # Round-off near the origin can dip below zero
    value = np.maximum(value, 0.0)
    return value if value.ndim else float(value)


def eval_abs_power(alpha, theta):
    theta = _check_theta(theta)
    value = np.abs(theta) ** alpha
    return value if value.ndim else float(value)


def eval_clipped_power(alpha, theta):
    if not 1.0 <= alpha < 2.0:
        raise DomainError(f"Clipped power order must lie in [1, 2), got {alpha}")
    theta = np.abs(_check_theta(theta))
    value = np.where(theta < np.pi / 2.0, theta**alpha, 1.0)
    return value if value.ndim else float(value)


def ratio_bound_constants(alpha) -> Tuple[float, float]:
    """Bounds on |theta|^alpha / g_alpha(theta) over [-pi, pi]."""
    check_alpha(alpha)
    return 0.5, np.pi**2 / (-8.0 * np.cos(np.pi * alpha / 2.0))


def small_angle_ratio_limit(alpha) -> float:
    # g_alpha(theta) ~ |theta|^alpha / c(alpha) as theta -> 0
    return riesz_constant(alpha)


def symbol_ratio_bounds(alpha, grid) -> Tuple[float, float]:
    grid = np.asarray(grid, dtype=np.float64)
    if np.any(grid == 0.0):
        raise ArgumentError("Ratio grid must exclude theta = 0")
    ratio = np.abs(grid) ** alpha / np.atleast_1d(eval_riesz_symbol(alpha, grid))
    return float(ratio.min()), float(ratio.max())


@dataclass(frozen=True)
class Symbol1D:
    kind: str
    alpha: Optional[float] = None
    func: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in SYMBOL_KINDS:
            raise ArgumentError(
                f"Unknown symbol kind: {self.kind}. Choose from {SYMBOL_KINDS}"
            )
        if self.kind == "custom" and self.func is None:
            raise ArgumentError("A custom symbol needs an evaluation function")

    @classmethod
    def riesz(cls, alpha):
        check_alpha(alpha)
        return cls("riesz", alpha)

    @classmethod
    def abs_power(cls, alpha):
        return cls("abs_power", alpha)

    @classmethod
    def clipped_power(cls, alpha):
        return cls("clipped_power", alpha)

    @classmethod
    def custom(cls, func):
        return cls("custom", func=func)

    def __call__(self, theta):
        if self.kind == "riesz":
            return eval_riesz_symbol(self.alpha, theta)
        if self.kind == "abs_power":
            return eval_abs_power(self.alpha, theta)
        if self.kind == "clipped_power":
            return eval_clipped_power(self.alpha, theta)
        return self.func(_check_theta(theta))

    def sample(self, theta) -> np.ndarray:
        """Values for quadrature; the clipped power takes its mean at the jump."""
        values = np.array(self(theta), dtype=np.float64, ndmin=1)
        if self.kind == "clipped_power":
            at_jump = np.abs(np.asarray(theta)) == np.pi / 2.0
            values[at_jump] = 0.5 * ((np.pi / 2.0) ** self.alpha + 1.0)
        return values


def _quadrature_size(count):
    return max(8, 1 << int(np.ceil(np.log2(8 * count))))


def fourier_coefficients_1d(
    symbol: Symbol1D, count: int, accuracy: float = None, max_points: int = None
) -> np.ndarray:
    """
    Coefficients t_j = (1/2pi) int symbol(theta) cos(j theta) dtheta for
    j = 0..count-1, by the midpoint rule on M points evaluated with one FFT.
    M doubles until two successive coefficient sets agree to `accuracy`.
    """
    if count < 1:
        raise ArgumentError(f"Coefficient count must be at least 1, got {count}")
    accuracy = config.quadrature_tol if accuracy is None else accuracy
    max_points = config.quadrature_max_points if max_points is None else max_points
    if accuracy <= 0:
        raise ArgumentError(f"Quadrature accuracy must be positive, got {accuracy}")

    j = np.arange(count)
    points = _quadrature_size(count)
    previous = None
    while True:
        # Midpoints; +-pi/2 and 0 fall on cell boundaries, never on nodes
        theta = -np.pi + (np.arange(points) + 0.5) * (2.0 * np.pi / points)
        spectrum = scipy.fft.rfft(symbol.sample(theta))[:count]
        shift = (-1.0) ** j * np.exp(-1j * np.pi * j / points)
        coeffs = (shift * spectrum).real / points

        if previous is not None and np.max(np.abs(coeffs - previous)) < accuracy:
            return coeffs
        if 2 * points > max_points:
            raise AccuracyError(
                f"Fourier coefficients did not reach accuracy {accuracy} "
                f"within {points} quadrature points",
                previous=previous,
                latest=coeffs,
            )
        previous = coeffs
        points *= 2


@dataclass(frozen=True)
class SymbolMulti:
    terms: Tuple[Symbol1D, ...]
    weights: Tuple[float, ...]
    rule: str = "weighted_sum"
    product: Tuple[Symbol1D, ...] = ()

    @classmethod
    def weighted_sum(cls, terms: Sequence[Symbol1D], weights: Sequence[float]):
        if len(terms) != len(weights):
            raise ArgumentError("Each level needs exactly one weight")
        if any(w <= 0 for w in weights):
            raise ArgumentError(f"Level weights must be positive, got {weights}")
        return cls(tuple(terms), tuple(float(w) for w in weights))

    @classmethod
    def sum_minus_product(cls, terms: Sequence[Symbol1D], product: Sequence[Symbol1D]):
        if len(terms) != len(product):
            raise ArgumentError("Product factors must match the number of levels")
        return cls(
            tuple(terms), (1.0,) * len(terms), "sum_minus_product", tuple(product)
        )

    @property
    def levels(self) -> int:
        return len(self.terms)

    def __call__(self, *thetas):
        if len(thetas) != self.levels:
            raise ArgumentError(f"Expected {self.levels} angles, got {len(thetas)}")
        total = sum(w * s(t) for w, s, t in zip(self.weights, self.terms, thetas))
        if self.rule == "sum_minus_product":
            total = total - reduce(
                np.multiply, [s(t) for s, t in zip(self.product, thetas)]
            )
        return total

    def coefficient_tensor(self, dims: Sequence[int], accuracy: float = None):
        """
        Multi-level Fourier coefficients t_{j_1..j_m}, j_i < n_i, assembled from
        1D coefficient sequences: a level term contributes along its own axis
        at zero index elsewhere, the product term as an outer product.
        """
        if len(dims) != self.levels:
            raise ArgumentError(f"Expected {self.levels} dimensions, got {len(dims)}")
        tensor = np.zeros(tuple(dims), dtype=np.float64)
        for axis, (weight, symbol) in enumerate(zip(self.weights, self.terms)):
            index = [0] * self.levels
            index[axis] = slice(None)
            tensor[tuple(index)] += weight * fourier_coefficients_1d(
                symbol, dims[axis], accuracy
            )
        if self.rule == "sum_minus_product":
            factors = [
                fourier_coefficients_1d(s, n, accuracy)
                for s, n in zip(self.product, dims)
            ]
            tensor -= reduce(np.multiply.outer, factors)
        return tensor


def riesz_multi_symbol(alphas, weights) -> SymbolMulti:
    """f(theta) = sum_i w_i g_{alpha_i}(theta_i); with w_i = l_i this is the G-symbol."""
    return SymbolMulti.weighted_sum([Symbol1D.riesz(a) for a in alphas], weights)


def abs_power_multi_symbol(alphas, weights) -> SymbolMulti:
    """q(theta) = sum_i l_i |theta_i|^alpha_i."""
    return SymbolMulti.weighted_sum([Symbol1D.abs_power(a) for a in alphas], weights)


def example4_symbol(alphas) -> SymbolMulti:
    """p(theta) = p_{a1}(theta_1) + p_{a2}(theta_2) - p_1(theta_1) p_1(theta_2)."""
    return SymbolMulti.sum_minus_product(
        [Symbol1D.clipped_power(a) for a in alphas],
        [Symbol1D.clipped_power(1.0) for _ in alphas],
    )


def assumption_ratio_bounds(
    p: SymbolMulti, q: SymbolMulti, samples: int = 100, limit: float = np.pi
):
    """Extremes of p/q on a tensor grid over [-limit, limit] per level, origin excluded."""
    axis = np.linspace(-limit, limit, samples)
    grids = np.meshgrid(*([axis] * p.levels), indexing="ij")
    denominator = q(*grids)
    mask = denominator > 0
    ratio = p(*grids)[mask] / denominator[mask]
    return float(ratio.min()), float(ratio.max())

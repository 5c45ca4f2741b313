"""
Model problems: Riesz fractional diffusion equations

    -sum_i d_i d^{alpha_i} u / d|x_i|^{alpha_i} = y  on  prod_i [a_i, b_i],  u = 0 on the boundary,

discretized with the shifted Grunwald-Letnikov formula, with manufactured
solutions u = prod_i (x_i - a_i)^2 (b_i - x_i)^2, and the two-level Toeplitz
system of Example 4 built straight from its generating function.
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import scipy.special

from config import config
from errors import ArgumentError, DomainError, UsageError
from generating_functions import example4_symbol
from gl_kernel import check_alpha, riesz_constant, riesz_first_column
from preconditioners.circulant import CirculantPreconditioner, build_strang
from preconditioners.multilevel_tau import MultilevelTauPreconditioner
from preconditioners.tau_kron import TauKronPreconditioner
from run_helpers.seed import random_vector
from toeplitz_ops import KronSumOperator, MultilevelToeplitz

EXAMPLE_IDS = [1, 2, 3, 4]

DEFAULT_ALPHAS = {
    1: (1.2,),
    2: (1.1, 1.2),
    3: (1.1, 1.2, 1.3),
    4: (1.9, 1.5),
}


@dataclass(frozen=True)
class RieszProblem:
    alphas: Tuple[float, ...]
    n: Tuple[int, ...]
    d: Optional[Tuple[float, ...]] = None
    domain: Optional[Tuple[Tuple[float, float], ...]] = None

    def __post_init__(self):
        m = len(self.alphas)
        if not 1 <= m <= 3:
            raise ArgumentError(f"Problems have 1 to 3 dimensions, got {m}")
        d = (1.0,) * m if self.d is None else tuple(float(v) for v in self.d)
        domain = ((0.0, 1.0),) * m if self.domain is None else self.domain
        domain = tuple((float(a), float(b)) for a, b in domain)
        if len(self.n) != m or len(d) != m or len(domain) != m:
            raise ArgumentError(
                "alphas, n, d and domain must all have one entry per dimension"
            )
        for alpha in self.alphas:
            check_alpha(alpha)
        if any(v <= 0 for v in d):
            raise ArgumentError(f"Diffusion coefficients must be positive, got {d}")
        if any(n < 1 for n in self.n):
            raise ArgumentError(f"Interior point counts must be positive, got {self.n}")
        if any(b <= a for a, b in domain):
            raise ArgumentError(f"Every interval needs a < b, got {domain}")
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "n", tuple(int(n) for n in self.n))
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "domain", domain)

    @classmethod
    def example(cls, example_id: int, alphas=None, n=None):
        if example_id not in (1, 2, 3):
            raise UsageError(f"Examples 1-3 are Riesz problems, got {example_id}")
        alphas = tuple(alphas or DEFAULT_ALPHAS[example_id])
        if len(alphas) != example_id:
            raise UsageError(
                f"Example {example_id} needs {example_id} fractional orders, got {len(alphas)}"
            )
        n = n or 63
        # Examples 2 and 3 use the same number of points in every direction
        dims = tuple(n) if isinstance(n, (tuple, list)) else (int(n),) * example_id
        return cls(alphas=alphas, n=dims)

    @property
    def m(self) -> int:
        return len(self.alphas)

    @property
    def dims(self) -> Tuple[int, ...]:
        return self.n

    @property
    def size(self) -> int:
        return int(np.prod(self.n))

    @property
    def h(self) -> Tuple[float, ...]:
        return tuple((b - a) / (n + 1) for (a, b), n in zip(self.domain, self.n))

    @property
    def weights(self) -> Tuple[float, ...]:
        return tuple(
            d * riesz_constant(alpha) / h**alpha
            for alpha, d, h in zip(self.alphas, self.d, self.h)
        )

    def grid_points(self, axis: int) -> np.ndarray:
        a = self.domain[axis][0]
        return a + self.h[axis] * np.arange(1, self.n[axis] + 1)

    def grid(self) -> List[np.ndarray]:
        return np.meshgrid(*[self.grid_points(i) for i in range(self.m)], indexing="ij")

    def sample(self, func) -> np.ndarray:
        """func evaluated at the interior points, first index fastest."""
        return np.asarray(func(*self.grid())).ravel(order="F")


def _y1(s, alpha, length):
    # Left Riemann-Liouville derivative of s^2 (length - s)^2
    gamma = scipy.special.gamma
    return (
        length**2 * 2.0 / gamma(3.0 - alpha) * s ** (2.0 - alpha)
        - length * 12.0 / gamma(4.0 - alpha) * s ** (3.0 - alpha)
        + 24.0 / gamma(5.0 - alpha) * s ** (4.0 - alpha)
    )


@dataclass(frozen=True)
class ManufacturedSolution:
    alphas: Tuple[float, ...]
    d: Tuple[float, ...]
    domain: Tuple[Tuple[float, float], ...]

    @classmethod
    def for_problem(cls, p: RieszProblem):
        return cls(p.alphas, p.d, p.domain)

    def _coordinates(self, coords):
        if len(coords) != len(self.alphas):
            raise ArgumentError(f"Expected {len(self.alphas)} coordinates, got {len(coords)}")
        coords = [np.asarray(x, dtype=np.float64) for x in coords]
        for x, (a, b) in zip(coords, self.domain):
            if np.any(x < a) or np.any(x > b):
                raise DomainError(f"Points must lie in [{a}, {b}]")
        return coords

    def _profiles(self, coords):
        return [(x - a) ** 2 * (b - x) ** 2 for x, (a, b) in zip(coords, self.domain)]

    def exact(self, *coords):
        coords = self._coordinates(coords)
        value = np.prod(np.broadcast_arrays(*self._profiles(coords)), axis=0)
        return value if value.ndim else float(value)

    def source(self, *coords):
        coords = self._coordinates(coords)
        profiles = self._profiles(coords)
        total = 0.0
        for i, (x, alpha, d, (a, b)) in enumerate(
            zip(coords, self.alphas, self.d, self.domain)
        ):
            length = b - a
            term = (
                d
                / (2.0 * np.cos(np.pi * alpha / 2.0))
                * (_y1(x - a, alpha, length) + _y1(b - x, alpha, length))
            )
            for j, profile in enumerate(profiles):
                if j != i:
                    term = term * profile
            total = total + term
        total = np.asarray(total)
        return total if total.ndim else float(total)


def _unit_box_source(coords, alphas, d):
    m = len(coords)
    return ManufacturedSolution(
        tuple(alphas), tuple(float(v) for v in d), ((0.0, 1.0),) * m
    ).source(*coords)


def source_term_example1(x, alpha: float, d: float = 1.0):
    return _unit_box_source([x], [alpha], [d])


def source_term_example2(x1, x2, alpha: Sequence[float], d: Sequence[float] = (1.0, 1.0)):
    return _unit_box_source([x1, x2], alpha, d)


def source_term_example3(
    x1, x2, x3, alpha: Sequence[float], d: Sequence[float] = (1.0, 1.0, 1.0)
):
    return _unit_box_source([x1, x2, x3], alpha, d)


@dataclass
class LinearSystem:
    operator: object
    rhs: np.ndarray
    # (alpha_i, n_i, weight_i) per level, for the Kronecker-sum tau preconditioner
    tau_levels: List[Tuple[float, int, float]]
    label: str
    problem: Optional[RieszProblem] = None
    # seed of a random right-hand side, None when the rhs is deterministic
    seed: Optional[int] = None

    @property
    def size(self) -> int:
        return self.rhs.size


def build_riesz_system(p: RieszProblem) -> Tuple[KronSumOperator, np.ndarray]:
    columns = [riesz_first_column(alpha, n).t for alpha, n in zip(p.alphas, p.n)]
    operator = KronSumOperator.from_columns(columns, p.weights)
    rhs = p.sample(ManufacturedSolution.for_problem(p).source)
    return operator, rhs


def riesz_linear_system(p: RieszProblem, label: str = None) -> LinearSystem:
    operator, rhs = build_riesz_system(p)
    return LinearSystem(
        operator=operator,
        rhs=rhs,
        tau_levels=list(zip(p.alphas, p.n, p.weights)),
        label=label or f"riesz-{p.m}d",
        problem=p,
    )


class Example4System(NamedTuple):
    operator: MultilevelToeplitz
    tau_g: TauKronPreconditioner
    tau_b: MultilevelTauPreconditioner
    circulant: CirculantPreconditioner
    rhs: np.ndarray


def _example4_operator(alphas, n, accuracy):
    if len(alphas) != 2 or len(n) != 2:
        raise ArgumentError("Example 4 is a two-level system")
    for alpha in alphas:
        check_alpha(alpha)
    if any(v < 2 for v in n):
        raise ArgumentError(f"Example 4 needs at least 2 points per level, got {n}")
    accuracy = config.example4_quadrature_tol if accuracy is None else accuracy
    return MultilevelToeplitz(example4_symbol(alphas).coefficient_tensor(n, accuracy))


def example4_linear_system(alphas, n, accuracy: float = None, seed: int = None) -> LinearSystem:
    operator = _example4_operator(alphas, n, accuracy)
    seed = config.rhs_seed if seed is None else seed
    return LinearSystem(
        operator=operator,
        # tau(G) with l_1 = l_2 = 1
        tau_levels=[(float(a), int(k), 1.0) for a, k in zip(alphas, n)],
        rhs=random_vector(seed, operator.size),
        label="example-4",
        seed=seed,
    )


def build_example4_system(alphas, n, accuracy: float = None, seed: int = None) -> Example4System:
    system = example4_linear_system(alphas, n, accuracy, seed)
    return Example4System(
        operator=system.operator,
        tau_g=TauKronPreconditioner(system.tau_levels),
        tau_b=MultilevelTauPreconditioner(system.operator),
        circulant=build_strang(system.operator),
        rhs=system.rhs,
    )


def example_system(example_id: int, alphas=None, n=None, seed: int = None) -> LinearSystem:
    if example_id not in EXAMPLE_IDS:
        raise UsageError(f"Unknown example: {example_id}. Choose from {EXAMPLE_IDS}")
    if example_id == 4:
        alphas = tuple(alphas or DEFAULT_ALPHAS[4])
        n = n or 63
        dims = tuple(n) if isinstance(n, (tuple, list)) else (int(n),) * 2
        return example4_linear_system(alphas, dims, seed=seed)
    return riesz_linear_system(
        RieszProblem.example(example_id, alphas, n), label=f"example-{example_id}"
    )


def error_norms(p: RieszProblem, solution) -> Tuple[float, float]:
    solution = np.asarray(solution, dtype=np.float64)
    if solution.shape != (p.size,):
        raise ArgumentError(f"Expected a solution of length {p.size}, got {solution.shape}")
    error = solution - p.sample(ManufacturedSolution.for_problem(p).exact)
    cell = float(np.prod(p.h))
    return float(np.max(np.abs(error))), float(np.sqrt(cell * np.sum(error**2)))

"""
The Kronecker-sum tau preconditioner

    P = sum_i I (x) w_i tau(G_{n_i}^{(alpha_i)}) (x) I,

diagonalized by S_{n_1} (x) ... (x) S_{n_m}. Its eigenvalues are sums of
per-level tau eigenvalues, all positive for Riesz columns.
"""

from errors import ArgumentError, DefinitenessError
from gl_kernel import check_alpha, riesz_first_column
from preconditioner import DiagonalizedPreconditioner, kron_sum_eigenvalues
from sine_transform import (
    SineTransformPlan,
    TauEigenvalues,
    dst_apply_levels,
    tau_dense,
    tau_eigenvalues,
)
from toeplitz_ops import SymToeplitz1D, level_kron


class TauKronPreconditioner(DiagonalizedPreconditioner):
    key = "tau"

    def __init__(self, levels):
        if len(levels) == 0:
            raise ArgumentError("The tau preconditioner needs at least one level")
        self.tau_levels = []
        self.plans = []
        self.level_eigenvalues = []
        for alpha, n, weight in levels:
            check_alpha(alpha)
            if weight <= 0:
                raise ArgumentError(f"Level weights must be positive, got {weight}")
            column = weight * riesz_first_column(alpha, int(n)).t
            self.tau_levels.append((float(alpha), int(n), float(weight)))
            self.plans.append(SineTransformPlan(int(n)))
            self.level_eigenvalues.append(
                TauEigenvalues(n=int(n), sigma=tau_eigenvalues(column).sigma)
            )

        eigenvalues = kron_sum_eigenvalues([e.sigma for e in self.level_eigenvalues])
        if eigenvalues.min() <= 0:
            raise DefinitenessError(
                f"tau preconditioner eigenvalue {eigenvalues.min():.3e} is not positive"
            )
        super().__init__(eigenvalues)

    @classmethod
    def from_system(cls, system, **options):
        return cls(system.tau_levels)

    def forward(self, grid):
        return dst_apply_levels(grid, self.levels)

    backward = forward

    def dense(self):
        return sum(
            level_kron(
                self.dims,
                axis,
                tau_dense(SymToeplitz1D(weight * riesz_first_column(alpha, n).t)),
            )
            for axis, (alpha, n, weight) in enumerate(self.tau_levels)
        )


def build_tau_kron(levels) -> TauKronPreconditioner:
    return TauKronPreconditioner(levels)

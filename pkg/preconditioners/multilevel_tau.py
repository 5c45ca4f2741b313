"""
Natural tau preconditioner tau(B) of a multi-level Toeplitz matrix B. Unlike
the Kronecker-sum tau preconditioner it may be indefinite even when B is
positive definite; that case is flagged rather than refused.
"""

from functools import reduce

import numpy as np

from errors import UsageError
from preconditioner import DiagonalizedPreconditioner
from sine_transform import SineTransformPlan, dst_apply_levels, tau_eigenvalue_tensor
from toeplitz_ops import KronSumOperator, MultilevelToeplitz


class MultilevelTauPreconditioner(DiagonalizedPreconditioner):
    key = "tau-natural"

    def __init__(self, operator: MultilevelToeplitz):
        self.operator = operator
        super().__init__(tau_eigenvalue_tensor(operator.coefficients))
        if not self.definite:
            print(
                f"⚠️  Natural tau preconditioner is indefinite "
                f"(smallest eigenvalue {self.eigenvalues.min():.3e})"
            )

    @classmethod
    def from_system(cls, system, **options):
        operator = system.operator
        if isinstance(operator, KronSumOperator):
            operator = MultilevelToeplitz(operator.coefficient_tensor())
        if not isinstance(operator, MultilevelToeplitz):
            raise UsageError("tau-natural needs a multi-level Toeplitz operator")
        return cls(operator)

    def forward(self, grid):
        return dst_apply_levels(grid, self.levels)

    backward = forward

    def dense(self):
        # First index fastest: S = S_{n_m} (x) ... (x) S_{n_1}
        sine = reduce(np.kron, [SineTransformPlan(n).dense() for n in reversed(self.dims)])
        return sine @ np.diag(self.eigenvalues.ravel(order="F")) @ sine


def build_multilevel_tau(B: MultilevelToeplitz) -> MultilevelTauPreconditioner:
    return MultilevelTauPreconditioner(B)

import numpy as np
import pytest
import scipy.linalg

from errors import ArgumentError, ResourceError, SingularPreconditionerError
from gl_kernel import riesz_first_column
from sine_transform import (
    SineTransformPlan,
    TauEigenvalues,
    dst_apply,
    hankel_correction,
    tau_dense,
    tau_eigenvalue_tensor,
    tau_eigenvalues,
    tau_solve_1d,
)
from toeplitz_ops import SymToeplitz1D


def test_dst_of_first_unit_vector():
    y = dst_apply(SineTransformPlan(3), [1.0, 0.0, 0.0])
    np.testing.assert_allclose(y, [0.5, np.sqrt(2.0) / 2.0, 0.5], atol=1e-15)


@pytest.mark.parametrize("n", [1, 5, 64])
def test_dst_matches_matrix_and_is_involution(rng, n):
    plan = SineTransformPlan(n)
    x = rng.standard_normal(n)
    np.testing.assert_allclose(dst_apply(plan, x), plan.dense() @ x, rtol=1e-12, atol=1e-13)
    np.testing.assert_allclose(dst_apply(plan, dst_apply(plan, x)), x, atol=1e-12 * n)


def test_dst_length_mismatch():
    with pytest.raises(ArgumentError):
        dst_apply(SineTransformPlan(4), np.ones(5))


def test_tau_dense_order_three():
    a, b, c = 4.0, -1.0, -0.5
    expected = np.array([[a - c, b, c], [b, a, b], [c, b, a - c]])
    np.testing.assert_allclose(tau_dense(SymToeplitz1D([a, b, c])), expected)


def test_tau_dense_order_one():
    np.testing.assert_allclose(tau_dense(SymToeplitz1D([2.5])), [[2.5]])


def test_hankel_correction_antidiagonals():
    t = np.arange(1.0, 7.0)
    H = hankel_correction(t)
    antidiagonals = [H[max(0, s - 5), s - max(0, s - 5)] for s in range(11)]
    np.testing.assert_allclose(antidiagonals, [3, 4, 5, 6, 0, 0, 0, 6, 5, 4, 3])


def test_tau_of_riesz_has_negative_off_diagonal():
    tau = tau_dense(SymToeplitz1D(riesz_first_column(1.5, 8).t))
    assert np.all(np.diag(tau) > 0)
    off = tau[~np.eye(8, dtype=bool)]
    assert np.all(off < 0)


def test_tau_eigenvalues_small_orders():
    np.testing.assert_allclose(tau_eigenvalues([3.0]).sigma, [3.0])
    np.testing.assert_allclose(tau_eigenvalues([2.0, -1.0]).sigma, [1.0, 3.0])


@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
@pytest.mark.parametrize("n", [4, 16, 64, 128])
def test_tau_eigenvalues_diagonalize_tau_matrix(alpha, n):
    T = SymToeplitz1D(riesz_first_column(alpha, n).t)
    S = SineTransformPlan(n).dense()
    sigma = tau_eigenvalues(T.column).sigma
    assert np.all(sigma > 0)
    np.testing.assert_allclose(np.diag(S @ tau_dense(T) @ S), sigma, atol=1e-10)
    j = np.arange(1, n + 1)
    k = np.arange(1, n)
    direct = T.column[0] + 2.0 * np.cos(np.outer(j, k) * np.pi / (n + 1)) @ T.column[1:]
    np.testing.assert_allclose(sigma, direct, atol=1e-10)


def test_tau_solve_identity():
    b = np.array([1.0, -2.0, 3.0])
    eigs = TauEigenvalues(3, np.ones(3))
    np.testing.assert_allclose(tau_solve_1d(eigs, SineTransformPlan(3), b), b, atol=1e-14)


def test_tau_solve_order_two():
    x = tau_solve_1d(tau_eigenvalues([2.0, -1.0]), SineTransformPlan(2), [1.0, 0.0])
    np.testing.assert_allclose(x, [2.0 / 3.0, 1.0 / 3.0], atol=1e-14)


def test_tau_solve_residual(rng):
    T = SymToeplitz1D(riesz_first_column(1.2, 64).t)
    b = rng.standard_normal(64)
    x = tau_solve_1d(tau_eigenvalues(T.column), SineTransformPlan(64), b)
    assert np.linalg.norm(tau_dense(T) @ x - b) / np.linalg.norm(b) < 1e-12


def test_tau_solve_singular():
    eigs = TauEigenvalues(2, np.array([1.0, 0.0]))
    with pytest.raises(SingularPreconditionerError):
        tau_solve_1d(eigs, SineTransformPlan(2), [1.0, 1.0])


def test_tau_eigenvalue_tensor_is_separable():
    c1 = riesz_first_column(1.3, 5).t
    c2 = riesz_first_column(1.7, 4).t
    tensor = np.zeros((5, 4))
    tensor[:, 0] += c1
    tensor[0, :] += c2
    expected = np.add.outer(tau_eigenvalues(c1).sigma, tau_eigenvalues(c2).sigma)
    np.testing.assert_allclose(tau_eigenvalue_tensor(tensor), expected, atol=1e-12)


@pytest.mark.parametrize("alpha", [1.2, 1.8])
def test_hankel_ratio_eigenvalues_inside_half(alpha):
    T = SymToeplitz1D(riesz_first_column(alpha, 128).t)
    eigenvalues = scipy.linalg.eigh(hankel_correction(T.column), tau_dense(T), eigvals_only=True)
    assert np.all(np.abs(eigenvalues) < 0.5)


def test_tau_dense_cap():
    with pytest.raises(ResourceError):
        tau_dense(SymToeplitz1D(np.ones(10)), cap=8)

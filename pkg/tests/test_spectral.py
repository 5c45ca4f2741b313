import numpy as np
import pytest
import scipy.linalg

from errors import ArgumentError, DefinitenessError, ResourceError
from gl_kernel import riesz_first_column
from preconditioners import build_banded, build_multilevel_tau, build_preconditioner
from problems import RieszProblem, riesz_linear_system
from spectral import (
    dense_preconditioned_spectrum,
    dense_spectrum_report,
    hankel_ratio_spectrum,
    lanczos_extremes,
)
from toeplitz_ops import KronSumOperator, MultilevelToeplitz, materialize_dense


def riesz_system(alphas, n):
    return riesz_linear_system(RieszProblem(alphas=tuple(alphas), n=tuple(n)))


def test_preconditioner_equal_to_operator_gives_ones():
    system = riesz_system((1.4, 1.6), (6, 5))
    P = build_preconditioner("tau", system)
    eigenvalues = dense_preconditioned_spectrum(P.dense(), P)
    np.testing.assert_allclose(eigenvalues, 1.0, atol=1e-10)


def test_tau_spectrum_1d_inside_half_and_three_halves():
    system = riesz_system((1.5,), (128,))
    report = dense_spectrum_report(system.operator, build_preconditioner("tau", system))
    assert 0.5 < report.lambda_min <= report.lambda_max < 1.5
    assert 1.0 <= report.condition_number < 3.0


def test_raw_spectrum_matches_dense_eigenvalues():
    system = riesz_system((1.3,), (40,))
    np.testing.assert_allclose(
        dense_preconditioned_spectrum(system.operator),
        np.linalg.eigvalsh(materialize_dense(system.operator)),
        rtol=1e-10,
    )


def test_banded_spectrum_matches_generalized_problem():
    system = riesz_system((1.5,), (32,))
    P = build_banded(system.operator.weighted_columns()[0], 4)
    expected = scipy.linalg.eigh(
        materialize_dense(system.operator), P.dense(), eigvals_only=True
    )
    np.testing.assert_allclose(
        dense_preconditioned_spectrum(system.operator, P), expected, rtol=1e-9
    )


@pytest.mark.parametrize("key", ["tau", "circulant"])
def test_lanczos_matches_dense_extremes(key):
    system = riesz_system((1.8,), (128,))
    P = build_preconditioner(key, system)
    dense = dense_spectrum_report(system.operator, P)
    report = lanczos_extremes(system.operator, P)
    assert report.converged
    assert report.lambda_min == pytest.approx(dense.lambda_min, abs=1e-8)
    assert report.lambda_max == pytest.approx(dense.lambda_max, abs=1e-8)


def test_lanczos_is_reproducible_for_a_seed():
    system = riesz_system((1.3, 1.6), (20, 20))
    P = build_preconditioner("tau", system)
    first = lanczos_extremes(system.operator, P, seed=7)
    second = lanczos_extremes(system.operator, P, seed=7)
    assert first.lambda_min == second.lambda_min
    assert first.iterations == second.iterations


@pytest.mark.parametrize("alpha", [1.1, 1.8])
def test_hankel_ratio_spectrum_inside_half(alpha):
    eigenvalues = hankel_ratio_spectrum(riesz_first_column(alpha, 128).t)
    assert np.all(np.abs(eigenvalues) < 0.5)


def test_dense_cap_enforced():
    A = KronSumOperator.from_columns(
        [riesz_first_column(1.5, 100).t, riesz_first_column(1.5, 50).t], [1.0, 1.0]
    )
    with pytest.raises(ResourceError):
        dense_preconditioned_spectrum(A)


def test_indefinite_preconditioner_refused():
    A = MultilevelToeplitz([2.0, 1.0])
    P = build_multilevel_tau(MultilevelToeplitz([0.0, 1.0]))
    assert not P.definite
    with pytest.raises(DefinitenessError):
        dense_preconditioned_spectrum(A, P)


def test_two_level_tau_spectrum_bounds():
    system = riesz_system((1.1, 1.2), (16, 16))
    report = dense_spectrum_report(system.operator, build_preconditioner("tau", system))
    assert 0.5 < report.lambda_min and report.lambda_max < 1.5
    assert report.condition_number < 3.0


@pytest.mark.parametrize("kwargs", [dict(iters=0), dict(tol=0.0), dict(tol=-1e-8)])
def test_lanczos_rejects_explicit_zero_settings(kwargs):
    system = riesz_system((1.5,), (16,))
    with pytest.raises(ArgumentError):
        lanczos_extremes(system.operator, **kwargs)

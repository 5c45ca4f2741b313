import numpy as np
import pytest

from errors import AccuracyError, ArgumentError, DomainError
from generating_functions import (
    Symbol1D,
    SymbolMulti,
    abs_power_multi_symbol,
    assumption_ratio_bounds,
    eval_clipped_power,
    eval_riesz_symbol,
    example4_symbol,
    fourier_coefficients_1d,
    ratio_bound_constants,
    riesz_multi_symbol,
    small_angle_ratio_limit,
    symbol_ratio_bounds,
)
from gl_kernel import riesz_first_column


def test_riesz_symbol_scalar_and_zero():
    value = eval_riesz_symbol(1.5, 0.0)
    assert isinstance(value, float)
    assert value == 0.0


def test_riesz_symbol_at_pi():
    # -2^{a+1} cos(pi) = 2^{a+1}
    assert eval_riesz_symbol(1.5, np.pi) == pytest.approx(2.0**2.5)


def test_riesz_symbol_is_even_and_non_negative():
    theta = np.linspace(0.01, np.pi, 50)
    np.testing.assert_allclose(
        eval_riesz_symbol(1.3, theta), eval_riesz_symbol(1.3, -theta)
    )
    assert np.all(eval_riesz_symbol(1.3, theta) > 0)


def test_symbol_outside_period_rejected():
    with pytest.raises(DomainError):
        eval_riesz_symbol(1.5, 4.0)
    with pytest.raises(DomainError):
        eval_riesz_symbol(2.5, 1.0)


def test_clipped_power():
    np.testing.assert_allclose(
        eval_clipped_power(1.5, np.array([0.5, np.pi / 2, 3.0])), [0.5**1.5, 1.0, 1.0]
    )


def test_small_angle_ratio_limit():
    assert small_angle_ratio_limit(1.8) == pytest.approx(0.5257311, rel=1e-6)
    theta = 1e-4
    ratio = theta**1.8 / eval_riesz_symbol(1.8, theta)
    assert ratio == pytest.approx(small_angle_ratio_limit(1.8), rel=1e-3)


@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
def test_symbol_ratio_bounds(alpha):
    grid = np.linspace(1e-3, np.pi, 400)
    lower, upper = symbol_ratio_bounds(alpha, grid)
    low_bound, high_bound = ratio_bound_constants(alpha)
    assert lower >= low_bound - 1e-12
    assert upper <= high_bound + 1e-12


def test_symbol_ratio_bounds_random_orders(rng):
    grid = np.linspace(-np.pi, np.pi, 10_000)
    grid = grid[grid != 0.0]
    for alpha in rng.uniform(1.001, 1.999, size=20):
        lower, upper = symbol_ratio_bounds(alpha, grid)
        low_bound, high_bound = ratio_bound_constants(alpha)
        assert lower >= low_bound - 1e-12, alpha
        assert upper <= high_bound + 1e-12, alpha


def test_symbol_ratio_grid_must_exclude_origin():
    with pytest.raises(ArgumentError):
        symbol_ratio_bounds(1.5, [0.0, 1.0])


@pytest.mark.parametrize("n", [8, 64, 512])
@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
def test_riesz_fourier_coefficients_match_first_column(alpha, n):
    coeffs = fourier_coefficients_1d(Symbol1D.riesz(alpha), n)
    assert np.max(np.abs(coeffs - riesz_first_column(alpha, n).t)) < 1e-8


def test_clipped_power_mean_closed_form():
    # (1/2pi) (pi^2/4 + pi)
    coeffs = fourier_coefficients_1d(Symbol1D.clipped_power(1.0), 1)
    assert coeffs[0] == pytest.approx(np.pi / 8.0 + 0.5, abs=1e-10)


def test_abs_power_two_coefficients():
    coeffs = fourier_coefficients_1d(Symbol1D.abs_power(2.0), 4)
    np.testing.assert_allclose(coeffs, [np.pi**2 / 3, -2.0, 0.5, -2.0 / 9.0], atol=1e-8)


def test_quadrature_cap_raises_accuracy_error():
    with pytest.raises(AccuracyError) as info:
        fourier_coefficients_1d(Symbol1D.riesz(1.1), 4, accuracy=1e-15, max_points=64)
    assert info.value.latest is not None


def test_zero_quadrature_accuracy_rejected():
    with pytest.raises(ArgumentError):
        fourier_coefficients_1d(Symbol1D.riesz(1.5), 4, accuracy=0.0)


def test_custom_symbol_constant():
    coeffs = fourier_coefficients_1d(Symbol1D.custom(lambda t: np.ones_like(t)), 3)
    np.testing.assert_allclose(coeffs, [1.0, 0.0, 0.0], atol=1e-12)


def test_unknown_symbol_kind_rejected():
    with pytest.raises(ArgumentError):
        Symbol1D("cosine")


def test_weighted_sum_tensor_is_separable():
    symbol = riesz_multi_symbol((1.2, 1.8), (2.0, 3.0))
    tensor = symbol.coefficient_tensor((5, 4))
    np.testing.assert_allclose(tensor[:, 0][1:], 2.0 * riesz_first_column(1.2, 5).t[1:], atol=1e-8)
    np.testing.assert_allclose(tensor[0, 1:], 3.0 * riesz_first_column(1.8, 4).t[1:], atol=1e-8)
    assert np.all(tensor[1:, 1:] == 0.0)


def test_weighted_sum_rejects_non_positive_weight():
    with pytest.raises(ArgumentError):
        SymbolMulti.weighted_sum([Symbol1D.riesz(1.5)], [0.0])


def test_example4_symbol_values():
    p = example4_symbol((1.9, 1.5))
    assert p(0.0, 0.0) == pytest.approx(0.0)
    assert p(np.pi, np.pi) == pytest.approx(1.0)
    assert p(0.5, 0.25) == pytest.approx(0.5**1.9 + 0.25**1.5 - 0.5 * 0.25)


def test_example4_ratio_bounds():
    p = example4_symbol((1.9, 1.5))
    q = abs_power_multi_symbol((1.9, 1.5), (1.0, 1.0))
    lower, upper = assumption_ratio_bounds(p, q, samples=100)
    assert 0.0 < lower
    assert upper <= 1.0 + 1e-12
    inner_lower, _ = assumption_ratio_bounds(p, q, samples=100, limit=0.499 * np.pi)
    assert inner_lower >= (4.0 - np.pi) / 4.0


def test_example4_tensor_symmetric_levels():
    tensor = example4_symbol((1.5, 1.5)).coefficient_tensor((6, 6))
    np.testing.assert_allclose(tensor, tensor.T, atol=1e-12)

import math

import numpy as np
import pytest
from pydantic import ValidationError

from gengeg_analysis.exception.exception import ComputationError, DomainError
from gengeg_analysis.extrema.sup_norm import (
    ThetaInterval,
    WeightKind,
    default_grid_points,
    jacobi_sup_norm,
    special_point_value,
    sup_norm,
    weighted_theta_estimate,
    weighted_theta_max,
)
from gengeg_analysis.polynomials.gegenbauer import orthonormal_values
from gengeg_analysis.polynomials.jacobi import jacobi_endpoint_values, jacobi_values
from gengeg_analysis.polynomials.params import GegenParams, JacobiParams
from gengeg_analysis.special.core import pochhammer


def test_default_grid_points():
    assert default_grid_points(0) == 4096
    assert default_grid_points(1000) == 32 * 1001


def test_constant_function():
    estimate = sup_norm(lambda t: np.ones_like(t), 0)
    assert estimate.value == 1.0
    assert estimate.argmax_t == 1.0
    assert estimate.grid_points == 4096


def test_endpoint_maximum_at_plus_one():
    estimate = sup_norm(lambda t: jacobi_values(2.0, 1.0, 5, t), 5)
    assert estimate.value == pytest.approx(21.0, rel=1e-12)
    assert estimate.argmax_t == 1.0


def test_endpoint_maximum_at_minus_one():
    estimate = sup_norm(lambda t: jacobi_values(0.3, 1.7, 6, t), 6)
    expected = pochhammer(2.7, 6) / 720.0
    assert estimate.value == pytest.approx(expected, rel=1e-12)
    assert estimate.value == pytest.approx(19.1765833875, rel=1e-10)
    assert estimate.argmax_t == -1.0


def test_non_finite_samples_are_reported():
    with pytest.raises(ComputationError):
        sup_norm(lambda t: np.where(t > 0.5, np.inf, 0.0), 3)


def test_refinement_never_decreases_the_estimate():
    f = lambda t: jacobi_values(-0.6, -0.7, 37, t)
    coarse = sup_norm(f, 37, grid_points=200, refine=False)
    refined = sup_norm(f, 37, grid_points=200)
    assert refined.value >= coarse.value
    assert refined.refined and not coarse.refined


def test_doubling_the_grid_changes_nothing():
    f = lambda t: jacobi_values(-0.6, -0.7, 50, t)
    base = sup_norm(f, 50, grid_points=4096)
    doubled = sup_norm(f, 50, grid_points=8192)
    assert doubled.value == pytest.approx(base.value, rel=1e-10)


@pytest.mark.parametrize("n", [6, 7, 40, 41])
def test_parity_consistency(n):
    params = GegenParams(lambda_=0.6, mu=1.4)
    forward = sup_norm(lambda t: orthonormal_values(params, n, t), n)
    mirrored = sup_norm(lambda t: orthonormal_values(params, n, -t), n)
    assert mirrored.value == pytest.approx(forward.value, rel=1e-10)


@pytest.mark.parametrize("alpha, beta, n, expected", [(2, 1, 5, 21.0), (0, 0, 9, 1.0)])
def test_jacobi_sup_norm_examples(alpha, beta, n, expected):
    estimate = jacobi_sup_norm(JacobiParams(alpha=alpha, beta=beta), n)
    assert estimate.value == pytest.approx(expected, rel=1e-13)
    assert estimate.argmax_t == 1.0


def test_jacobi_sup_norm_without_closed_form():
    params = JacobiParams(alpha=-0.6, beta=-0.7)
    estimate = jacobi_sup_norm(params, 8)
    dense = np.max(np.abs(jacobi_values(-0.6, -0.7, 8, np.cos(np.linspace(0.0, math.pi, 1_000_001)))))
    assert estimate.value >= dense * (1 - 1e-12)
    assert estimate.value == pytest.approx(dense, rel=1e-9)


@pytest.mark.slow
@pytest.mark.parametrize("alpha, beta", [(2.0, 1.0), (0.3, 1.7), (-0.4, 0.7), (1.5, -0.5), (0.0, 0.0)])
@pytest.mark.parametrize("n", [50, 200, 1000])
def test_grid_maximum_equals_endpoint_value(alpha, beta, n):
    params = JacobiParams(alpha=alpha, beta=beta)
    at_plus_one, abs_at_minus_one = jacobi_endpoint_values(params, n)
    closed = at_plus_one if alpha >= beta else abs_at_minus_one
    grid = sup_norm(lambda t: jacobi_values(alpha, beta, n, t), n)
    assert grid.value == pytest.approx(closed, rel=1e-9)
    assert jacobi_sup_norm(params, n).value == closed


def test_theta_interval_validation():
    interval = ThetaInterval(lo=0.25, hi=1.0)
    assert interval.length == 0.75
    with pytest.raises(ValidationError):
        ThetaInterval(lo=1.0, hi=1.0)
    with pytest.raises(ValidationError):
        ThetaInterval(lo=-0.1, hi=1.0)
    with pytest.raises(ValidationError):
        ThetaInterval(lo=0.0, hi=4.0)


def test_weighted_max_degree_zero():
    params = JacobiParams(alpha=1.3, beta=0.2)
    value = weighted_theta_max(params, 0, ThetaInterval(lo=0.0, hi=math.pi / 2), WeightKind.SIN_HALF_THETA)
    assert value == pytest.approx(math.sin(math.pi / 4), rel=1e-12)


def test_weighted_max_accepts_string_kinds():
    params = JacobiParams(alpha=1.3, beta=0.2)
    interval = ThetaInterval(lo=0.0, hi=math.pi / 2)
    assert weighted_theta_max(params, 4, interval, "none") == weighted_theta_max(params, 4, interval, WeightKind.NONE)


def test_weighted_max_near_one_is_bounded():
    params = JacobiParams(alpha=2.5, beta=0.3)
    value = weighted_theta_max(params, 200, ThetaInterval(lo=0.0, hi=math.pi / 2), WeightKind.SIN_HALF_THETA)
    assert 0 < value / 200 ** 1.5 < 10


def test_theta_power_region_is_bounded():
    params = JacobiParams(alpha=1.2, beta=0.4)
    estimate = weighted_theta_estimate(params, 150, ThetaInterval(lo=1 / 150, hi=math.pi / 2), WeightKind.THETA_POWER)
    assert 0 < estimate.value / 150 ** -0.5 < 10
    assert 1 / 150 <= estimate.argmax_theta <= math.pi / 2


def test_theta_power_with_negative_exponent_needs_positive_lower_end():
    params = JacobiParams(alpha=-0.8, beta=0.0)
    with pytest.raises(DomainError):
        weighted_theta_max(params, 10, ThetaInterval(lo=0.0, hi=1.0), WeightKind.THETA_POWER)
    assert weighted_theta_max(params, 10, ThetaInterval(lo=0.1, hi=1.0), WeightKind.THETA_POWER) > 0


def test_special_point_examples():
    assert special_point_value(JacobiParams(alpha=0, beta=0), 1) == pytest.approx(math.cos(1.0), rel=1e-14)
    with pytest.raises(DomainError):
        special_point_value(JacobiParams(alpha=-0.5, beta=0), 10)
    with pytest.raises(DomainError):
        special_point_value(JacobiParams(alpha=0, beta=0), 0)


def test_special_point_growth():
    params = JacobiParams(alpha=0.7, beta=2.4)
    ratios = [special_point_value(params, n) / n ** 0.7 for n in (50, 100, 200, 400, 800, 1600)]
    assert max(ratios) / min(ratios) <= 3
    ratio = special_point_value(JacobiParams(alpha=1.5, beta=0.2), 500) / 500 ** 1.5
    assert 0.01 < ratio < 10

import math

import numpy as np
import pytest
from pydantic import ValidationError

from gengeg_analysis.exception.exception import DomainError
from gengeg_analysis.polynomials.gegenbauer import (
    connection_constant,
    connection_eval,
    gegenbauer_eval,
    gegenbauer_values,
    gengeg_eval,
    gengeg_orthonormal_eval,
    gengeg_values,
    gengeg_weight,
    log_orthonormal_coefficient,
    orthonormal_coefficient,
    plain_coefficient,
)
from gengeg_analysis.polynomials.params import GegenParams
from gengeg_analysis.special.core import log_beta, pochhammer


def params(lam, mu):
    return GegenParams(lambda_=lam, mu=mu)


def test_params_alias_and_validation():
    p = GegenParams.model_validate({"lambda": 2.0, "mu": 1.0})
    assert p.lam == 2.0
    assert p.model_dump(by_alias=True) == {"lambda": 2.0, "mu": 1.0}
    assert p.even_jacobi().alpha == 1.5 and p.even_jacobi().beta == 0.5
    assert p.odd_jacobi().beta == 1.5
    with pytest.raises(ValidationError):
        params(-0.5, 1.0)
    with pytest.raises(ValidationError):
        params(1.0, -0.1)


@pytest.mark.parametrize("lam, mu, n, expected", [(1, 0.5, 0, 1.0), (1, 0.5, 1, 1.5), (0.5, 0.5, 2, 1.0)])
def test_plain_coefficient_examples(lam, mu, n, expected):
    assert plain_coefficient(params(lam, mu), n) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("lam, mu, n, expected", [(0.5, 0.5, 0, 1.0), (1, 0.5, 0, math.sqrt(1.5))])
def test_orthonormal_coefficient_examples(lam, mu, n, expected):
    coefficient = orthonormal_coefficient(params(lam, mu), n)
    assert coefficient.n == n
    assert coefficient.value == pytest.approx(expected, rel=1e-13)


def test_orthonormal_coefficient_large_index_stays_finite():
    p = params(2.0, 1.0)
    value = orthonormal_coefficient(p, 2000).value
    assert 0.5 <= value / math.sqrt(1000) <= 2.0
    assert math.isfinite(log_orthonormal_coefficient(p, 1_000_000))


def test_orthonormal_coefficient_matches_gamma_products_for_small_index():
    lam, mu = 1.3, 0.6
    for k in range(6):
        even_sq = (2 * k + lam + mu) * math.gamma(k + lam + mu) * math.gamma(k + 1) / (
            math.gamma(k + lam + 0.5) * math.gamma(k + mu + 0.5)
        )
        odd_sq = (2 * k + lam + mu + 1) * math.gamma(k + 1) * math.gamma(k + lam + mu + 1) / (
            math.gamma(k + lam + 0.5) * math.gamma(k + mu + 1.5)
        )
        p = params(lam, mu)
        assert orthonormal_coefficient(p, 2 * k).value == pytest.approx(math.sqrt(even_sq), rel=1e-12)
        assert orthonormal_coefficient(p, 2 * k + 1).value == pytest.approx(math.sqrt(odd_sq), rel=1e-12)


@pytest.mark.parametrize(
    "lam, mu, n, t, expected",
    [(0.9, 0.3, 0, -0.7, 1.0), (1, 0.5, 1, 0.4, 0.6), (0.5, 0.5, 2, 1.0, 1.0)],
)
def test_gengeg_eval_examples(lam, mu, n, t, expected):
    assert gengeg_eval(params(lam, mu), n, t) == pytest.approx(expected, rel=1e-14)


def test_gengeg_eval_rejects_outside_points():
    with pytest.raises(DomainError):
        gengeg_eval(params(1, 1), 3, 1.01)


def test_orthonormal_eval_examples():
    p = params(0.5, 0.5)
    for t in (-1.0, -0.3, 0.0, 0.8):
        assert gengeg_orthonormal_eval(p, 0, t) == pytest.approx(1.0, rel=1e-14)
    assert gengeg_orthonormal_eval(params(2, 1), 7, 0.0) == 0.0
    p = params(1.5, 0.8)
    expected = orthonormal_coefficient(p, 6).value * pochhammer(2.0, 3) / 6.0
    assert gengeg_orthonormal_eval(p, 6, 1.0) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("lam, mu", [(2, 1), (0.6, 1.4), (-0.3, 0.2)])
def test_parity(lam, mu):
    p = params(lam, mu)
    t = np.linspace(-1, 1, 501)
    for n in range(101):
        values = gengeg_values(p, n, t, plain_coefficient(p, n))
        mirrored = gengeg_values(p, n, -t, plain_coefficient(p, n))
        scale = np.maximum(1.0, np.abs(values))
        assert np.max(np.abs(mirrored - (-1) ** n * values) / scale) <= 1e-10


@pytest.mark.parametrize("lam", [0.5, 1.0, 2.5])
def test_mu_zero_reduces_to_gegenbauer(lam):
    p = params(lam, 0.0)
    t = np.linspace(-1, 1, 201)
    for n in range(61):
        ours = gengeg_values(p, n, t, plain_coefficient(p, n))
        classical = gegenbauer_values(lam, n, t)
        scale = max(1.0, float(np.max(np.abs(classical))))
        assert np.max(np.abs(ours - classical)) <= 1e-9 * scale


def test_legendre_special_case():
    for n in range(40):
        assert gegenbauer_eval(0.5, n, 1.0) == pytest.approx(1.0, rel=1e-13)
        assert gengeg_eval(params(0.5, 0.0), n, 1.0) == pytest.approx(1.0, rel=1e-12)


def test_gegenbauer_eval_chebyshev_second_kind():
    # C_n^1 = U_n
    theta = 0.7
    for n in range(20):
        expected = math.sin((n + 1) * theta) / math.sin(theta)
        assert gegenbauer_eval(1.0, n, math.cos(theta)) == pytest.approx(expected, rel=1e-12, abs=1e-12)
    with pytest.raises(DomainError):
        gegenbauer_eval(-0.5, 2, 0.0)


@pytest.mark.parametrize(
    "lam, mu, t, expected",
    [(0.5, 0.5, 0.5, 0.5), (0.5, 1, 0.0, 0.0), (1.5, 0, 0.6, 0.64)],
)
def test_weight_examples(lam, mu, t, expected):
    assert gengeg_weight(params(lam, mu), t) == pytest.approx(expected, rel=1e-14)


def test_weight_pole():
    with pytest.raises(DomainError):
        gengeg_weight(params(0.3, 1.0), 1.0)


def test_connection_constant():
    assert connection_constant(1.0) == pytest.approx(0.5, rel=1e-14)
    assert connection_constant(0.5) == pytest.approx(1.0 / math.pi, rel=1e-14)
    assert connection_constant(2.3) == pytest.approx(math.exp(-log_beta(0.5, 2.3)))
    with pytest.raises(DomainError):
        connection_constant(0.0)


def test_connection_examples():
    assert connection_eval(params(1, 0.5), 0, 0.3) == pytest.approx(1.0, rel=1e-13)
    assert connection_eval(params(1, 0.5), 1, 0.4) == pytest.approx(0.6, rel=1e-12)
    p = params(0.7, 0.9)
    assert connection_eval(p, 3, 0.3) == pytest.approx(gengeg_eval(p, 3, 0.3), rel=1e-8)


def test_connection_rejects_mu_zero_and_few_points():
    with pytest.raises(DomainError):
        connection_eval(params(1, 0.0), 2, 0.5)
    with pytest.raises(DomainError):
        connection_eval(params(1, 1.0), 20, 0.5, m=10)


@pytest.mark.slow
@pytest.mark.parametrize("mu", [0.3, 0.9, 2.0])
@pytest.mark.parametrize("lam", [-0.3, 0.7, 2.5])
def test_connection_formula_agrees_with_definition(lam, mu):
    p = params(lam, mu)
    ts = np.linspace(-1, 1, 21)
    for n in range(101):
        direct = gengeg_values(p, n, ts, plain_coefficient(p, n))
        via_integral = np.array([connection_eval(p, n, t) for t in ts])
        scale = max(1.0, float(np.max(np.abs(direct))))
        assert np.max(np.abs(via_integral - direct)) <= 1e-8 * scale

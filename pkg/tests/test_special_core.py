import math

import pytest

from gengeg_analysis.exception.exception import ComputationError, DomainError
from gengeg_analysis.special.core import (
    gamma_ratio,
    log_beta,
    log_gamma,
    log_pochhammer,
    pochhammer,
    pochhammer_ratio,
)


@pytest.mark.parametrize(
    "x, expected",
    [(1.0, 0.0), (0.5, 0.5723649429247001), (10.0, math.log(362880.0))],
)
def test_log_gamma_reference_values(x, expected):
    assert log_gamma(x) == pytest.approx(expected, rel=1e-13, abs=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.5, math.inf, math.nan])
def test_log_gamma_rejects_non_positive_or_non_finite(x):
    with pytest.raises(DomainError):
        log_gamma(x)


def test_log_beta_matches_gamma_form():
    assert log_beta(0.5, 2.0) == pytest.approx(log_gamma(0.5) + log_gamma(2.0) - log_gamma(2.5), rel=1e-13)
    with pytest.raises(DomainError):
        log_beta(0.0, 1.0)


@pytest.mark.parametrize("q, n, expected", [(2.5, 0, 1.0), (3, 5, 2520.0), (1.5, 3, 13.125)])
def test_pochhammer_examples(q, n, expected):
    assert pochhammer(q, n) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("q", [0.3, 1.0, 2.5, 7.25])
def test_pochhammer_product_agrees_with_log_gamma_form(q):
    for n in range(65):
        direct = pochhammer(q, n)
        assert math.exp(log_gamma(q + n) - log_gamma(q)) == pytest.approx(direct, rel=1e-10)


@pytest.mark.parametrize("q", [0.3, 1.0, 2.5])
def test_pochhammer_recurrence(q):
    for n in range(50):
        assert pochhammer(q, n + 1) == pytest.approx(pochhammer(q, n) * (q + n), rel=1e-14)


def test_pochhammer_large_index_uses_log_space():
    assert pochhammer(1.0, 100) == pytest.approx(math.factorial(100), rel=1e-11)


def test_pochhammer_overflow_is_reported():
    with pytest.raises(ComputationError):
        pochhammer(1000.0, 200)


def test_pochhammer_of_non_positive_q():
    assert pochhammer(0.0, 3) == 0.0
    assert pochhammer(-0.5, 2) == pytest.approx(-0.25)


def test_log_pochhammer_domain():
    assert log_pochhammer(2.0, 0) == 0.0
    assert log_pochhammer(2.0, 3) == pytest.approx(math.log(24.0), rel=1e-14)
    with pytest.raises(DomainError):
        log_pochhammer(0.0, 3)
    with pytest.raises(DomainError):
        log_pochhammer(1.0, -1)


@pytest.mark.parametrize("q, r", [(2.5, 1.0), (0.7, 1.3), (-0.5, 1.0), (-0.95, 0.05), (0.0, 2.0)])
@pytest.mark.parametrize("n", [0, 1, 5, 30, 31, 80, 400])
def test_pochhammer_ratio_matches_direct_product(q, r, n):
    direct = 1.0
    for k in range(n):
        direct *= (q + k) / (r + k)
    assert pochhammer_ratio(q, r, n) == pytest.approx(direct, rel=1e-11, abs=1e-300)


def test_pochhammer_ratio_zero_numerator_is_exact():
    assert pochhammer_ratio(0.0, 1.5, 1000) == 0.0


def test_pochhammer_ratio_domain():
    with pytest.raises(DomainError):
        pochhammer_ratio(1.0, 0.0, 3)
    with pytest.raises(DomainError):
        pochhammer_ratio(-1.0, 1.0, 3)


@pytest.mark.parametrize(
    "a, b, n, expected",
    [(3.7, 3.7, 12, 1.0), (2.0, 0.0, 100, 10100.0)],
)
def test_gamma_ratio_examples(a, b, n, expected):
    assert gamma_ratio(a, b, n) == pytest.approx(expected, rel=1e-11)


def test_gamma_ratio_stirling_check():
    assert 0.99 <= gamma_ratio(0.5, 0.0, 1000) / 1000 ** 0.5 <= 1.01


@pytest.mark.parametrize("a, b", [(0.5, 0.0), (4.0, 0.0), (-2.0, 1.5), (3.2, -0.7)])
def test_gamma_ratio_reciprocity_and_band(a, b):
    for n in [10, 25, 100, 1000, 100000]:
        forward = gamma_ratio(a, b, n)
        assert forward * gamma_ratio(b, a, n) == pytest.approx(1.0, rel=1e-12)
        assert 0.5 <= forward / n ** (a - b) <= 2.0


def test_gamma_ratio_domain():
    with pytest.raises(DomainError):
        gamma_ratio(-5.0, 0.0, 3)


@pytest.mark.parametrize("n", [math.nan, math.inf, -math.inf, 2.5, -1, True, "3"])
def test_counts_must_be_finite_non_negative_integers(n):
    with pytest.raises(DomainError):
        pochhammer(1.5, n)
    with pytest.raises(DomainError):
        pochhammer_ratio(1.5, 2.5, n)
    with pytest.raises(DomainError):
        gamma_ratio(1.5, 2.5, n)

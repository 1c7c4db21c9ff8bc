"""Generalized Gegenbauer polynomials C_n^(lambda, mu) and their orthonormal versions.

C_{2k}(t)   = a_{2k}   P_k^(lambda-1/2, mu-1/2)(2t^2 - 1)
C_{2k+1}(t) = a_{2k+1} t P_k^(lambda-1/2, mu+1/2)(2t^2 - 1)

The orthonormal family uses the coefficients a~_n instead of a_n; mu = 0 gives the
classical Gegenbauer polynomials C_n^lambda.
"""
import math

import numpy as np

from gengeg_analysis.exception.exception import DomainError
from gengeg_analysis.polynomials.jacobi import check_degree, check_point, jacobi_values
from gengeg_analysis.polynomials.params import GegenParams, JacobiParams, OrthonormalCoefficient
from gengeg_analysis.quadrature.gauss_jacobi import gauss_jacobi_rule
from gengeg_analysis.special.core import log_beta, log_gamma, pochhammer_ratio


def plain_coefficient(params: GegenParams, n: int) -> float:
    """a_n: (lambda+mu)_k / (mu+1/2)_k with k = n/2 (even n) or (n+1)/2 (odd n)."""
    n = check_degree(n)
    k = n // 2 if n % 2 == 0 else n // 2 + 1
    return pochhammer_ratio(params.lam + params.mu, params.mu + 0.5, k)


def log_orthonormal_coefficient(params: GegenParams, n: int) -> float:
    n = check_degree(n)
    lam, mu = params.lam, params.mu
    k = n // 2
    if n % 2 == 0:
        if k == 0:
            # (lambda+mu) Gamma(lambda+mu) folded into Gamma(lambda+mu+1)
            head = log_gamma(lam + mu + 1.0)
        else:
            head = math.log(2.0 * k + lam + mu) + log_gamma(k + lam + mu)
        log_sq = head + log_gamma(k + 1.0) - log_gamma(k + lam + 0.5) - log_gamma(k + mu + 0.5)
    else:
        log_sq = (
            math.log(2.0 * k + lam + mu + 1.0)
            + log_gamma(k + 1.0)
            + log_gamma(k + lam + mu + 1.0)
            - log_gamma(k + lam + 0.5)
            - log_gamma(k + mu + 1.5)
        )
    return 0.5 * log_sq


def orthonormal_coefficient(params: GegenParams, n: int) -> OrthonormalCoefficient:
    """a~_n, the factor making C~_n a unit vector in L^2(v_{lambda,mu})."""
    n = check_degree(n)
    return OrthonormalCoefficient(n=n, value=math.exp(log_orthonormal_coefficient(params, n)))


def gengeg_values(params: GegenParams, n: int, t, coefficient: float):
    """coefficient * (parity-appropriate Jacobi composite) at the points t."""
    t = np.asarray(t, dtype=float)
    u = 2.0 * t * t - 1.0
    k = n // 2
    if n % 2 == 0:
        inner = params.even_jacobi()
        return coefficient * jacobi_values(inner.alpha, inner.beta, k, u)
    inner = params.odd_jacobi()
    return coefficient * t * jacobi_values(inner.alpha, inner.beta, k, u)


def orthonormal_values(params: GegenParams, n: int, t):
    return gengeg_values(params, n, t, orthonormal_coefficient(params, n).value)


def gengeg_eval(params: GegenParams, n: int, t: float) -> float:
    n = check_degree(n)
    t = check_point(t)
    return float(gengeg_values(params, n, t, plain_coefficient(params, n)))


def gengeg_orthonormal_eval(params: GegenParams, n: int, t: float) -> float:
    n = check_degree(n)
    t = check_point(t)
    return float(orthonormal_values(params, n, t))


def gengeg_weight(params: GegenParams, t: float) -> float:
    """v_{lambda,mu}(t) = |t|^(2 mu) (1 - t^2)^(lambda - 1/2)."""
    t = check_point(t)
    if abs(t) == 1.0 and params.lam < 0.5:
        raise DomainError(f"weight has a pole at t={t} for lambda={params.lam} < 1/2")
    return abs(t) ** (2.0 * params.mu) * (1.0 - t * t) ** (params.lam - 0.5)


def gegenbauer_values(lam: float, n: int, x):
    """C_n^lambda(x) = ((2 lambda)_n / (lambda+1/2)_n) P_n^(lambda-1/2, lambda-1/2)(x)."""
    scale = pochhammer_ratio(2.0 * lam, lam + 0.5, n)
    return scale * jacobi_values(lam - 0.5, lam - 0.5, n, x)


def gegenbauer_eval(lam: float, n: int, t: float) -> float:
    if not math.isfinite(lam) or lam <= -0.5:
        raise DomainError(f"Gegenbauer polynomials require lambda > -1/2, got {lam!r}")
    n = check_degree(n)
    t = check_point(t)
    return float(gegenbauer_values(lam, n, t))


def connection_constant(mu: float) -> float:
    """c_mu with 1/c_mu = 2 int_0^1 (1-x^2)^(mu-1) dx = B(1/2, mu)."""
    if not math.isfinite(mu) or mu <= 0:
        raise DomainError(f"the connection formula requires mu > 0, got {mu!r}")
    return math.exp(-log_beta(0.5, mu))


def connection_eval(params: GegenParams, n: int, t: float, m: int | None = None) -> float:
    """C_n^(lambda,mu)(t) through c_mu int C_n^(lambda+mu)(tx) (1+x) (1-x^2)^(mu-1) dx.

    The factor (1-x^2)^(mu-1) is the Gauss-Jacobi weight with exponents
    (mu-1, mu-1); the rest is a polynomial of degree n+1 in x.
    """
    n = check_degree(n)
    t = check_point(t)
    if params.mu <= 0:
        raise DomainError("the connection formula requires mu > 0 (mu = 0 is not covered)")
    if m is None:
        m = math.ceil(n / 2) + 8
    if m < n / 2 + 8:
        raise DomainError(f"connection_eval needs at least n/2 + 8 = {n / 2 + 8:g} quadrature points, got {m}")
    rule = gauss_jacobi_rule(JacobiParams(alpha=params.mu - 1.0, beta=params.mu - 1.0), m)
    x = rule.nodes
    integrand = gegenbauer_values(params.lam + params.mu, n, t * x) * (1.0 + x)
    return connection_constant(params.mu) * math.fsum(rule.weights * integrand)

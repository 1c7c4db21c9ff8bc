"""Gauss-Jacobi quadrature rules and weighted integrals."""
import logging
import math
import sys
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from scipy.linalg import eigh_tridiagonal
from scipy.optimize import bisect

from gengeg_analysis.config.load_config import get_settings
from gengeg_analysis.exception.exception import ComputationError, DomainError
from gengeg_analysis.polynomials.jacobi import jacobi_derivative_values, jacobi_table, jacobi_values
from gengeg_analysis.polynomials.params import JacobiParams
from gengeg_analysis.special.core import log_gamma

logger = logging.getLogger(__name__)


class QuadratureRule(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    params: JacobiParams
    nodes: np.ndarray
    weights: np.ndarray

    @model_validator(mode="after")
    def _check_rule(self):
        if self.nodes.shape != self.weights.shape or self.nodes.ndim != 1 or self.nodes.size == 0:
            raise ValueError("nodes and weights must be non-empty 1-D arrays of equal length")
        if np.any(np.diff(self.nodes) <= 0):
            raise ValueError("nodes must be strictly increasing")
        if np.any(self.nodes <= -1.0) or np.any(self.nodes >= 1.0):
            raise ValueError("nodes must lie in the open interval (-1, 1)")
        if np.any(self.weights <= 0):
            raise ValueError("weights must be positive")
        return self

    @property
    def size(self) -> int:
        return int(self.nodes.size)


def _jacobi_matrix(a, b, m):
    """Diagonal and off-diagonal of the symmetric Jacobi matrix of the monic recurrence."""
    k = np.arange(m, dtype=float)
    diag = np.empty(m)
    diag[0] = (b - a) / (a + b + 2.0)
    if m > 1:
        s = 2.0 * k[1:] + a + b
        diag[1:] = (b * b - a * a) / (s * (s + 2.0))
    off = np.empty(max(m - 1, 0))
    if m > 1:
        off[0] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) ** 2 * (3.0 + a + b))
    if m > 2:
        kk = k[2:]
        s = 2.0 * kk + a + b
        off[1:] = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) / (s * s * (s + 1.0) * (s - 1.0))
    return diag, np.sqrt(off)


def _polish_nodes(a, b, m, x):
    """Newton iteration on P_m, bisection on sign-change brackets as fallback."""
    settings = get_settings().quadrature
    for iteration in range(settings.newton_max_iter):
        step = jacobi_values(a, b, m, x) / jacobi_derivative_values(a, b, m, x)
        x = x - step
        if np.max(np.abs(step)) <= settings.newton_tol:
            logger.debug("Newton polish for (%s, %s, m=%d) converged after %d steps", a, b, m, iteration + 1)
            return x
    if np.max(np.abs(step)) <= 1e3 * settings.newton_tol:
        # rounding-level steps; the zeros are as accurate as P_m can resolve
        return x

    logger.warning("Newton polish did not converge for (%s, %s, m=%d); falling back to bisection", a, b, m)
    edges = np.concatenate(([-1.0], 0.5 * (x[1:] + x[:-1]), [1.0]))
    polished = np.empty_like(x)
    for i in range(m):
        lo, hi = edges[i], edges[i + 1]
        f = lambda s: float(jacobi_values(a, b, m, s))
        if f(lo) * f(hi) > 0:
            raise ComputationError(
                f"no sign change of P_{m}^({a},{b}) on [{lo}, {hi}]; node solver failed for node {i}"
            )
        polished[i] = bisect(f, lo, hi, xtol=1e-15, maxiter=200)
    return polished


@lru_cache(maxsize=get_settings().quadrature.cache_size)
def _cached_rule(a: float, b: float, m: int) -> QuadratureRule:
    try:
        diag, off = _jacobi_matrix(a, b, m)
        if m == 1:
            initial = diag.copy()
        else:
            initial = eigh_tridiagonal(diag, off, eigvals_only=True)
    except Exception as e:
        raise ComputationError(e, sys)

    nodes = np.sort(_polish_nodes(a, b, m, initial))
    log_scale = (
        (a + b + 1.0) * math.log(2.0)
        + log_gamma(m + a + 1.0)
        + log_gamma(m + b + 1.0)
        - log_gamma(m + a + b + 1.0)
        - log_gamma(m + 1.0)
    )
    derivative = jacobi_derivative_values(a, b, m, nodes)
    weights = math.exp(log_scale) / ((1.0 - nodes * nodes) * derivative * derivative)

    nodes.setflags(write=False)
    weights.setflags(write=False)
    try:
        return QuadratureRule(params=JacobiParams(alpha=a, beta=b), nodes=nodes, weights=weights)
    except ValueError as e:
        raise ComputationError(e, sys)


def gauss_jacobi_rule(params: JacobiParams, m: int) -> QuadratureRule:
    """m-point Gauss rule for w_{alpha,beta}; exact up to degree 2m - 1."""
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise DomainError(f"a quadrature rule needs m >= 1 points, got {m!r}")
    return _cached_rule(float(params.alpha), float(params.beta), int(m))


def integrate(rule: QuadratureRule, f) -> float:
    """sum_i w_i f(x_i), approximating int f w_{alpha,beta} over [-1, 1]."""
    values = np.broadcast_to(np.asarray(f(rule.nodes), dtype=float), rule.nodes.shape)
    if not np.all(np.isfinite(values)):
        raise ComputationError("integrand is not finite at every quadrature node")
    return math.fsum(rule.weights * values)


def jacobi_gram_matrix(params: JacobiParams, n_max: int, m: int) -> np.ndarray:
    """Matrix of int P_i P_j w_{alpha,beta}, i, j = 0..n_max."""
    if m < n_max + 1:
        raise ComputationError(f"an exact Gram matrix up to degree {n_max} needs m >= {n_max + 1} points, got {m}")
    rule = gauss_jacobi_rule(params, m)
    table = jacobi_table(params.alpha, params.beta, n_max, rule.nodes)
    return (table * rule.weights) @ table.T

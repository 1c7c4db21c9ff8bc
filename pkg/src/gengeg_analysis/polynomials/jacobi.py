"""Jacobi polynomials P_n^(alpha, beta): evaluation, endpoint values, norms, weight."""
import math

import numpy as np

from gengeg_analysis.exception.exception import DomainError
from gengeg_analysis.polynomials.params import EvalSequence, JacobiParams
from gengeg_analysis.special.core import check_count, log_beta, log_gamma, pochhammer_ratio


def check_degree(n, name="n"):
    return check_count(n, name)


def check_point(t) -> float:
    t = float(t)
    if not math.isfinite(t) or t < -1.0 or t > 1.0:
        raise DomainError(f"evaluation point must lie in [-1, 1], got {t!r}")
    return t


def _recurrence_coefficients(a, b, n):
    """Coefficients (A_k, B_k, C_k) of P_k = (A_k + B_k x) P_{k-1} - C_k P_{k-2}, k = 2..n."""
    k = np.arange(2, n + 1, dtype=float)
    apb = a + b
    a1 = 2.0 * k * (k + apb) * (2.0 * k + apb - 2.0)
    a2 = (2.0 * k + apb - 1.0) * (a * a - b * b)
    a3 = (2.0 * k + apb - 2.0) * (2.0 * k + apb - 1.0) * (2.0 * k + apb)
    a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + apb)
    return (a2 / a1).tolist(), (a3 / a1).tolist(), (a4 / a1).tolist()


def jacobi_values(alpha, beta, n, x):
    """Evaluate P_n^(alpha, beta) at the points x by forward three-term recurrence.

    No validation is done here; this is the kernel used by every other module.
    """
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = 0.5 * (alpha - beta + (alpha + beta + 2.0) * x)
    if n == 1:
        return p1
    A, B, C = _recurrence_coefficients(alpha, beta, n)
    for a_k, b_k, c_k in zip(A, B, C):
        p0, p1 = p1, (a_k + b_k * x) * p1 - c_k * p0
    return p1


def jacobi_table(alpha, beta, n_max, x):
    """All degrees 0..n_max at the points x; row k holds P_k."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    result = np.empty((n_max + 1, x.size), dtype=float)
    result[0] = 1.0
    if n_max >= 1:
        result[1] = 0.5 * (alpha - beta + (alpha + beta + 2.0) * x)
    if n_max >= 2:
        A, B, C = _recurrence_coefficients(alpha, beta, n_max)
        for k, (a_k, b_k, c_k) in enumerate(zip(A, B, C), start=2):
            result[k] = (a_k + b_k * x) * result[k - 1] - c_k * result[k - 2]
    return result


def jacobi_derivative_values(alpha, beta, n, x):
    x = np.asarray(x, dtype=float)
    if n == 0:
        return np.zeros_like(x)
    return 0.5 * (n + alpha + beta + 1.0) * jacobi_values(alpha + 1.0, beta + 1.0, n - 1, x)


def jacobi_eval(params: JacobiParams, n_max: int, t: float) -> EvalSequence:
    """P_0(t), ..., P_{n_max}(t) for a single point t in [-1, 1]."""
    n_max = check_degree(n_max, "n_max")
    t = check_point(t)
    table = jacobi_table(params.alpha, params.beta, n_max, [t])[:, 0]
    return EvalSequence(params=params, point=t, values=tuple(float(v) for v in table))


def jacobi_endpoint_values(params: JacobiParams, n: int) -> tuple[float, float]:
    """(P_n(1), |P_n(-1)|) = ((alpha+1)_n / n!, (beta+1)_n / n!)."""
    n = check_degree(n)
    at_plus_one = pochhammer_ratio(params.alpha + 1.0, 1.0, n)
    abs_at_minus_one = pochhammer_ratio(params.beta + 1.0, 1.0, n)
    return at_plus_one, abs_at_minus_one


def jacobi_norm_squared(params: JacobiParams, n: int) -> float:
    """h_n = int P_n^2 w_{alpha,beta} over [-1, 1]."""
    n = check_degree(n)
    a, b = params.alpha, params.beta
    if n == 0:
        # Beta form; stays finite when alpha + beta + 1 <= 0
        return math.exp((a + b + 1.0) * math.log(2.0) + log_beta(a + 1.0, b + 1.0))
    log_h = (
        (a + b + 1.0) * math.log(2.0)
        + log_gamma(n + a + 1.0)
        + log_gamma(n + b + 1.0)
        - math.log(2.0 * n + a + b + 1.0)
        - log_gamma(n + 1.0)
        - log_gamma(n + a + b + 1.0)
    )
    return math.exp(log_h)


def jacobi_weight(params: JacobiParams, t: float) -> float:
    """w_{alpha,beta}(t) = (1-t)^alpha (1+t)^beta."""
    t = check_point(t)
    a, b = params.alpha, params.beta
    if (t == 1.0 and a < 0) or (t == -1.0 and b < 0):
        raise DomainError(f"Jacobi weight has a pole at t={t} for alpha={a}, beta={b}")
    return (1.0 - t) ** a * (1.0 + t) ** b

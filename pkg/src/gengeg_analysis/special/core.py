"""Scalar gamma-function kernels.

Every coefficient formula of the package is a product of gamma functions or
Pochhammer symbols; all of them go through these helpers so that large indices
are handled in log-space.
"""
import math

from scipy.special import betaln, gammaln

from gengeg_analysis.config.load_config import get_settings
from gengeg_analysis.exception.exception import ComputationError, DomainError

# exp() overflows just above this
_LOG_MAX = math.log(1.7976931348623157e308)


def check_count(n, name="n"):
    """n as an int; DomainError for negatives, fractions, bools, NaN and infinities."""
    try:
        valid = not isinstance(n, bool) and math.isfinite(n) and int(n) == n and n >= 0
    except (TypeError, ValueError):
        valid = False
    if not valid:
        raise DomainError(f"{name} must be a non-negative integer, got {n!r}")
    return int(n)


def _exp_checked(log_value, what):
    if log_value > _LOG_MAX:
        raise ComputationError(f"{what} overflows double precision (log value {log_value:.6g})")
    return math.exp(log_value)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for finite x > 0."""
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"log_gamma requires a finite positive argument, got {x!r}")
    return float(gammaln(x))


def log_beta(a: float, b: float) -> float:
    if not (math.isfinite(a) and math.isfinite(b)) or a <= 0 or b <= 0:
        raise DomainError(f"log_beta requires finite positive arguments, got ({a!r}, {b!r})")
    return float(betaln(a, b))


def log_pochhammer(q: float, n: int) -> float:
    """ln (q)_n for q > 0."""
    n = check_count(n)
    if q <= 0:
        raise DomainError(f"log_pochhammer requires q > 0, got {q!r}")
    if n == 0:
        return 0.0
    return log_gamma(q + n) - log_gamma(q)


def pochhammer(q: float, n: int) -> float:
    """Rising factorial (q)_n = q(q+1)...(q+n-1), (q)_0 = 1."""
    n = check_count(n)
    if not math.isfinite(q):
        raise DomainError(f"pochhammer requires a finite q, got {q!r}")
    if n <= get_settings().special.pochhammer_crossover or q <= 0:
        result = 1.0
        for k in range(n):
            result *= q + k
        if not math.isfinite(result):
            raise ComputationError(f"pochhammer({q}, {n}) overflows double precision")
        return result
    return _exp_checked(log_pochhammer(q, n), f"pochhammer({q}, {n})")


def pochhammer_ratio(q: float, r: float, n: int) -> float:
    """(q)_n / (r)_n for r > 0 and q > -1, without forming either factor.

    For q <= 0 the numerator is split as q * (q+1)_{n-1}, which keeps the sign
    and returns an exact zero when q == 0.
    """
    n = check_count(n)
    if r <= 0:
        raise DomainError(f"pochhammer_ratio requires r > 0, got {r!r}")
    if q <= -1:
        raise DomainError(f"pochhammer_ratio requires q > -1, got {q!r}")
    if n == 0:
        return 1.0
    if n <= get_settings().special.log_space_threshold:
        result = 1.0
        for k in range(n):
            result *= (q + k) / (r + k)
        return result
    if q > 0:
        return _exp_checked(log_pochhammer(q, n) - log_pochhammer(r, n), "pochhammer_ratio")
    if q == 0:
        return 0.0
    tail = log_pochhammer(q + 1, n - 1) - log_pochhammer(r, n)
    return q * _exp_checked(tail, "pochhammer_ratio")


def gamma_ratio(a: float, b: float, n: int) -> float:
    """Gamma(n+a) / Gamma(n+b) through the log-gamma difference."""
    n = check_count(n)
    if n + a <= 0 or n + b <= 0:
        raise DomainError(f"gamma_ratio requires n+a > 0 and n+b > 0, got n={n}, a={a}, b={b}")
    return _exp_checked(log_gamma(n + a) - log_gamma(n + b), "gamma_ratio")

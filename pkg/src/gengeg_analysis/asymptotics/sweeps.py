"""n-sweeps of sup norms and the log-log exponent fit."""
import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from gengeg_analysis.exception.exception import DomainError
from gengeg_analysis.asymptotics.state import AsymptoticRecord, AsymptoticReport, Verdict
from gengeg_analysis.extrema.sup_norm import sup_norm
from gengeg_analysis.polynomials.gegenbauer import orthonormal_coefficient, orthonormal_values
from gengeg_analysis.polynomials.jacobi import jacobi_values
from gengeg_analysis.polynomials.params import GegenParams

logger = logging.getLogger(__name__)


def log_spaced_counts(n_min: int, n_max: int, samples: int) -> list[int]:
    """Rounded geometric grid between n_min and n_max, duplicates removed."""
    if n_min < 1 or n_max < n_min or samples < 1:
        raise DomainError(f"invalid sweep range n_min={n_min}, n_max={n_max}, samples={samples}")
    grid = np.rint(np.geomspace(n_min, n_max, samples)).astype(int)
    return [int(n) for n in np.unique(grid)]


def check_n_values(n_values) -> list[int]:
    n_values = [int(n) for n in n_values]
    if not n_values:
        raise DomainError("at least one n is required")
    if n_values[0] < 1 or any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise DomainError(f"n values must be strictly increasing integers >= 1, got {n_values}")
    return n_values


def make_record(n: int, value: float, exponent: float, argmax_t=None) -> AsymptoticRecord:
    return AsymptoticRecord(n=n, sup_norm=value, normalized_ratio=value / n ** exponent, argmax_t=argmax_t)


def supnorm_series(
    params: GegenParams,
    n_values,
    grid_points: int | None = None,
    max_workers: int = 1,
) -> list[AsymptoticRecord]:
    """||C~_n^(lambda,mu)||_inf and its ratio to n^max(lambda, mu) for every n."""
    if params.mu <= 0:
        raise DomainError("the sup-norm asymptotics require mu > 0; the Gegenbauer case mu = 0 is not covered")
    n_values = check_n_values(n_values)
    exponent = max(params.lam, params.mu)

    def one(n):
        estimate = sup_norm(lambda t: orthonormal_values(params, n, t), n, grid_points)
        logger.info("sup norm of C~_%d^(%s,%s) = %.17g", n, params.lam, params.mu, estimate.value)
        return make_record(n, estimate.value, exponent, estimate.argmax_t)

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(one, n_values))
    return [one(n) for n in n_values]


def fit_exponent(records, parity_intercepts: bool = False) -> float:
    """Least-squares slope of log(sup_norm) against log(n).

    With parity_intercepts even and odd n get separate intercepts and share the
    slope, so an alternating constant does not tilt the fit.
    """
    records = list(records)
    if len(records) < 3:
        raise DomainError(f"an exponent fit needs at least 3 records, got {len(records)}")
    n = np.array([r.n for r in records], dtype=float)
    if np.unique(n).size != n.size:
        raise DomainError("an exponent fit needs distinct n values")
    x = np.log(n)
    y = np.log(np.array([r.sup_norm for r in records]))
    odd = n % 2 == 1
    if parity_intercepts and 0 < odd.sum() < odd.size:
        design = np.column_stack([x, np.ones_like(x), odd.astype(float)])
        coef, *_ = np.linalg.lstsq(design, y, rcond=None)
        return float(coef[0])
    x_c = x - x.mean()
    return float(np.dot(x_c, y - y.mean()) / np.dot(x_c, x_c))


def fit_if_possible(records, fit_min_n: int = 1, parity_intercepts: bool = False):
    """Fit over n >= fit_min_n when that leaves 3 records, else over everything; None if too few."""
    tail = [r for r in records if r.n >= fit_min_n]
    if len(tail) >= 3:
        return fit_exponent(tail, parity_intercepts)
    if len(records) >= 3:
        return fit_exponent(records, parity_intercepts)
    return None


def ratio_band(records) -> tuple[float, float]:
    ratios = [r.normalized_ratio for r in records]
    return min(ratios), max(ratios)


def upper_bounded(records, band_tol: float) -> bool:
    """Ratios never exceed band_tol times the ratio at the smallest n."""
    first = records[0].normalized_ratio
    return max(r.normalized_ratio for r in records) <= band_tol * first


def two_sided(records, band_tol: float) -> bool:
    lo, hi = ratio_band(records)
    return hi <= band_tol * lo


def series_report(
    label,
    params,
    records,
    target_exponent,
    band_tol,
    rule="two_sided",
    slope_tol=None,
    fit_min_n=1,
    note=None,
    parity_intercepts=False,
) -> AsymptoticReport:
    """Report for one ratio series; rule is 'two_sided' or 'upper'."""
    lo, hi = ratio_band(records)
    fitted = fit_if_possible(records, fit_min_n, parity_intercepts)
    bounded = two_sided(records, band_tol) if rule == "two_sided" else upper_bounded(records, band_tol)
    slope_ok = True
    if slope_tol is not None:
        slope_ok = fitted is not None and abs(fitted - target_exponent) <= slope_tol
    return AsymptoticReport(
        label=label,
        params=params,
        records=tuple(records),
        fitted_exponent=fitted,
        target_exponent=target_exponent,
        ratio_min=lo,
        ratio_max=hi,
        verdict=Verdict.PASS if bounded and slope_ok else Verdict.FAIL,
        tolerance_used=band_tol,
        slope_tol=slope_tol,
        fit_min_n=fit_min_n,
        note=note,
    )


def odd_lower_bound_witnesses(params: GegenParams, n: int) -> tuple[float, float]:
    """Two values |C~_n| attains for odd n = 2k+1, k >= 1: at t = 1 and at t = sin(1/(2k))."""
    if n % 2 == 0 or n < 3:
        raise DomainError(f"lower-bound witnesses are defined for odd n >= 3, got {n}")
    k = n // 2
    coefficient = orthonormal_coefficient(params, n).value
    at_one = abs(float(orthonormal_values(params, n, 1.0)))
    swapped = jacobi_values(params.mu + 0.5, params.lam - 0.5, k, math.cos(1.0 / k))
    special = coefficient * math.sin(0.5 / k) * abs(float(swapped))
    return at_one, special

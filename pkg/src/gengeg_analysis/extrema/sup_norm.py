"""Sup norms on [-1, 1] and weighted maxima over theta-intervals (t = cos theta).

Sampling is uniform in theta, i.e. Chebyshev-distributed in t. The best sampled
local maxima are refined by golden-section search on their bracketing triples.
"""
import logging
import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from gengeg_analysis.config.load_config import get_settings
from gengeg_analysis.exception.exception import ComputationError, DomainError
from gengeg_analysis.polynomials.jacobi import check_degree, jacobi_endpoint_values, jacobi_values
from gengeg_analysis.polynomials.params import JacobiParams

logger = logging.getLogger(__name__)

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class SupNormEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float = Field(ge=0, allow_inf_nan=False)
    argmax_t: float = Field(ge=-1, le=1)
    argmax_theta: float | None = Field(default=None, ge=0, le=math.pi)
    grid_points: int = Field(ge=64)
    refined: bool


class ThetaInterval(BaseModel):
    model_config = ConfigDict(frozen=True)

    lo: float = Field(ge=0)
    hi: float = Field(le=math.pi)

    @model_validator(mode="after")
    def _non_empty(self):
        if not self.lo < self.hi:
            raise ValueError(f"theta interval [{self.lo}, {self.hi}] is empty")
        return self

    @property
    def length(self) -> float:
        return self.hi - self.lo


class WeightKind(str, Enum):
    NONE = "none"
    SIN_HALF_THETA = "sin_half_theta"
    THETA_POWER = "theta_power"


def default_grid_points(degree: int) -> int:
    settings = get_settings().extrema
    return max(settings.min_grid_points, settings.points_per_degree * (degree + 1))


def _finite(values, what):
    if not np.all(np.isfinite(values)):
        raise ComputationError(f"non-finite sample encountered while estimating {what}")
    return values


def _golden_section_max(g, lo, hi, tol, max_iter):
    """Maximize g independently on every bracket [lo_i, hi_i]; vectorized over brackets."""
    a, b = lo.astype(float), hi.astype(float)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    gc, gd = g(c), g(d)
    for _ in range(max_iter):
        if np.max(b - a) <= tol:
            break
        left = gc >= gd
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        c_next = np.where(left, b - _INV_PHI * (b - a), d)
        d_next = np.where(left, c, a + _INV_PHI * (b - a))
        trial = np.where(left, c_next, d_next)
        gp = _finite(g(trial), "a refined maximum")
        gc, gd = np.where(left, gp, gd), np.where(left, gc, gp)
        c, d = c_next, d_next
    best = gc >= gd
    return np.where(best, c, d), np.where(best, gc, gd)


def maximize_on_theta_grid(g, thetas, refine=True):
    """Return (max value, theta at the max) of a non-negative g sampled on thetas.

    Among values within the tie tolerance of the maximum the smallest theta wins.
    """
    settings = get_settings().extrema
    values = _finite(np.asarray(g(thetas), dtype=float), "a maximum")
    thetas_all, values_all = thetas, values

    if refine and thetas.size >= 3:
        left = np.concatenate(([-np.inf], values[:-1]))
        right = np.concatenate((values[1:], [-np.inf]))
        peaks = np.flatnonzero((values >= left) & (values >= right))
        order = np.argsort(-values[peaks], kind="stable")[: settings.refine_candidates]
        candidates = peaks[order]
        lo = thetas[np.maximum(candidates - 1, 0)]
        hi = thetas[np.minimum(candidates + 1, thetas.size - 1)]
        refined_thetas, refined_values = _golden_section_max(
            g, lo, hi, settings.theta_tolerance, settings.max_golden_iterations
        )
        thetas_all = np.concatenate((thetas, refined_thetas))
        values_all = np.concatenate((values, refined_values))
        logger.debug("refined %d candidates; coarse %.17g -> %.17g",
                     candidates.size, values.max(), values_all.max())

    best = values_all.max()
    ties = values_all >= best * (1.0 - settings.tie_tolerance)
    theta_star = float(thetas_all[ties].min())
    return float(best), theta_star


def sup_norm(f, degree_hint: int, grid_points: int | None = None, refine: bool = True) -> SupNormEstimate:
    """max |f(t)| over [-1, 1] for a vectorized f, e.g. a polynomial of degree degree_hint."""
    degree_hint = check_degree(degree_hint, "degree_hint")
    n_points = max(64, grid_points or default_grid_points(degree_hint))
    thetas = np.linspace(0.0, math.pi, n_points)

    def g(theta):
        t = np.cos(theta)
        return np.abs(np.broadcast_to(np.asarray(f(t), dtype=float), t.shape))

    value, theta_star = maximize_on_theta_grid(g, thetas, refine)
    return SupNormEstimate(
        value=value,
        argmax_t=float(np.clip(math.cos(theta_star), -1.0, 1.0)),
        argmax_theta=theta_star,
        grid_points=n_points,
        refined=refine,
    )


def jacobi_sup_norm(params: JacobiParams, n: int, grid_points: int | None = None) -> SupNormEstimate:
    """||P_n^(alpha,beta)||_inf: endpoint value when max(alpha, beta) >= -1/2, grid search otherwise."""
    n = check_degree(n)
    a, b = params.alpha, params.beta
    grid = sup_norm(lambda t: jacobi_values(a, b, n, t), n, grid_points)
    at_plus_one, abs_at_minus_one = jacobi_endpoint_values(params, n)

    if a >= b and a >= -0.5:
        closed, t_star, theta_star = at_plus_one, 1.0, 0.0
    elif b >= a and b >= -0.5:
        closed, t_star, theta_star = abs_at_minus_one, -1.0, math.pi
    else:
        return grid

    if abs(grid.value - closed) > 1e-9 * closed:
        raise ComputationError(
            f"grid search ({grid.value!r}) disagrees with the endpoint value ({closed!r}) "
            f"for alpha={a}, beta={b}, n={n}"
        )
    return SupNormEstimate(
        value=closed,
        argmax_t=t_star,
        argmax_theta=theta_star,
        grid_points=grid.grid_points,
        refined=grid.refined,
    )


def _theta_weight(params: JacobiParams, interval: ThetaInterval, weight_kind: WeightKind):
    weight_kind = WeightKind(weight_kind)
    if weight_kind is WeightKind.NONE:
        return lambda theta: 1.0
    if weight_kind is WeightKind.SIN_HALF_THETA:
        return lambda theta: np.sin(0.5 * theta)
    exponent = params.alpha + 0.5
    if exponent < 0 and interval.lo == 0.0:
        raise DomainError(f"theta^{exponent:g} is unbounded at theta = 0; the interval must exclude 0")
    return lambda theta: theta ** exponent


def weighted_theta_estimate(
    params: JacobiParams,
    n: int,
    interval: ThetaInterval,
    weight_kind: WeightKind | str = WeightKind.NONE,
    grid_points: int | None = None,
) -> SupNormEstimate:
    n = check_degree(n)
    settings = get_settings().extrema
    weight = _theta_weight(params, interval, weight_kind)
    base = grid_points or default_grid_points(n)
    n_points = max(settings.min_interval_points, math.ceil(base * interval.length / math.pi))
    thetas = np.linspace(interval.lo, interval.hi, n_points)
    a, b = params.alpha, params.beta

    def g(theta):
        return weight(theta) * np.abs(jacobi_values(a, b, n, np.cos(theta)))

    value, theta_star = maximize_on_theta_grid(g, thetas)
    return SupNormEstimate(
        value=value,
        argmax_t=float(np.clip(math.cos(theta_star), -1.0, 1.0)),
        argmax_theta=theta_star,
        grid_points=n_points,
        refined=True,
    )


def weighted_theta_max(
    params: JacobiParams,
    n: int,
    interval: ThetaInterval,
    weight_kind: WeightKind | str = WeightKind.NONE,
    grid_points: int | None = None,
) -> float:
    """max over theta in interval of weight(theta) |P_n^(alpha,beta)(cos theta)|."""
    return weighted_theta_estimate(params, n, interval, weight_kind, grid_points).value


def special_point_value(params: JacobiParams, n: int) -> float:
    """|P_n^(alpha,beta)(cos(1/n))|, which grows like n^alpha when alpha > -1/2."""
    n = check_degree(n)
    if n < 1:
        raise DomainError("special_point_value needs n >= 1")
    if params.alpha <= -0.5:
        raise DomainError(f"the special-point estimate requires alpha > -1/2, got alpha={params.alpha}")
    return abs(float(jacobi_values(params.alpha, params.beta, n, math.cos(1.0 / n))))

"""Verification suites: sup-norm growth of the orthonormal family and the Jacobi facts behind it.

Every asymptotic statement becomes a ratio series value / n^exponent; a tight
bound is checked two-sided (max/min within band_tol), an upper bound by
requiring the ratios to stay below band_tol times the first ratio.
"""
import logging
import math

from gengeg_analysis.asymptotics.state import AsymptoticReport, Verdict
from gengeg_analysis.asymptotics.sweeps import (
    check_n_values,
    log_spaced_counts,
    make_record,
    odd_lower_bound_witnesses,
    series_report,
    supnorm_series,
)
from gengeg_analysis.config.load_config import get_settings
from gengeg_analysis.exception.exception import DomainError
from gengeg_analysis.extrema.sup_norm import (
    ThetaInterval,
    WeightKind,
    sup_norm,
    weighted_theta_estimate,
)
from gengeg_analysis.polynomials.gegenbauer import orthonormal_coefficient
from gengeg_analysis.polynomials.jacobi import jacobi_endpoint_values, jacobi_values
from gengeg_analysis.polynomials.params import GegenParams, JacobiParams

logger = logging.getLogger(__name__)

WITNESS_SLACK = 1e-9
ENDPOINT_TOLERANCE = 1e-9


def _combine(verdicts) -> Verdict:
    verdicts = list(verdicts)
    if any(v is Verdict.FAIL for v in verdicts):
        return Verdict.FAIL
    if all(v is Verdict.NOT_APPLICABLE for v in verdicts):
        return Verdict.NOT_APPLICABLE
    return Verdict.PASS


def _not_applicable(label, params, target_exponent, band_tol, note) -> AsymptoticReport:
    logger.info("%s skipped: %s", label, note)
    return AsymptoticReport(
        label=label,
        params=params,
        target_exponent=target_exponent,
        verdict=Verdict.NOT_APPLICABLE,
        tolerance_used=band_tol,
        note=note,
    )


def _with_parts(primary: AsymptoticReport, label, parts, checks=None, note=None) -> AsymptoticReport:
    """Composite report: primary series on top, the parts nested.

    The verdict is the conjunction of the primary, the parts and every named check.
    """
    verdict = _combine([primary.verdict, *(p.verdict for p in parts)])
    failed = [name for name, ok in (checks or {}).items() if not ok]
    if failed:
        logger.warning("%s fails on check(s) %s", label, ", ".join(failed))
        verdict = Verdict.FAIL
    return primary.model_copy(
        update={
            "label": label,
            "verdict": verdict,
            "subreports": tuple(parts),
            "checks": dict(checks or {}),
            "note": note or primary.note,
        }
    )


def verify_theorem1(
    params: GegenParams,
    n_min: int | None = None,
    n_max: int | None = None,
    samples: int | None = None,
    slope_tol: float | None = None,
    band_tol: float | None = None,
    grid_points: int | None = None,
    max_workers: int = 1,
) -> AsymptoticReport:
    """||C~_n^(lambda,mu)||_inf ~ n^max(lambda, mu) on a log-spaced n grid.

    The combined sequence needs |fitted - max(lambda, mu)| <= slope_tol, where the fit
    shares one slope between parities but gives each its own intercept, and
    ratio_max / ratio_min <= band_tol. The even and odd subsequences must pass the same
    test on their own, and for odd n the measured norm must reach two independently
    computed values of |C~_n|.
    """
    settings = get_settings().asymptotics
    n_min = settings.n_min if n_min is None else n_min
    n_max = settings.n_max if n_max is None else n_max
    samples = settings.samples if samples is None else samples
    slope_tol = settings.slope_tol if slope_tol is None else slope_tol
    band_tol = settings.band_tol if band_tol is None else band_tol

    if params.mu <= 0:
        raise DomainError("the sup-norm asymptotics require mu > 0; the Gegenbauer case mu = 0 is not covered")
    if n_min < 10:
        raise DomainError(f"verify_theorem1 needs n_min >= 10, got {n_min}")
    if samples < 8:
        raise DomainError(f"verify_theorem1 needs samples >= 8, got {samples}")
    if n_max <= n_min:
        raise DomainError(f"n_max must exceed n_min, got [{n_min}, {n_max}]")

    n_values = log_spaced_counts(n_min, n_max, samples)
    even_ns = sorted({n if n % 2 == 0 else n + 1 for n in n_values})
    odd_ns = sorted({n if n % 2 == 1 else n + 1 for n in n_values})
    all_ns = sorted(set(n_values) | set(even_ns) | set(odd_ns))
    logger.info("sup-norm sweep for lambda=%s mu=%s over %d indices", params.lam, params.mu, len(all_ns))
    by_n = {r.n: r for r in supnorm_series(params, all_ns, grid_points, max_workers)}

    target = max(params.lam, params.mu)
    fit_min_n = settings.fit_min_n

    def report(label, ns):
        return series_report(
            label, params, [by_n[n] for n in ns], target, band_tol,
            rule="two_sided", slope_tol=slope_tol, fit_min_n=fit_min_n, parity_intercepts=True,
        )

    combined = report("theorem1", n_values)
    even = report("theorem1_even", even_ns)
    odd = report("theorem1_odd", odd_ns)

    witnesses_hold = True
    for n in odd_ns:
        if n < 3:
            continue
        at_one, special = odd_lower_bound_witnesses(params, n)
        measured = by_n[n].sup_norm
        if measured < max(at_one, special) * (1.0 - WITNESS_SLACK):
            logger.warning("n=%d: sup norm %.17g below witness (%.17g, %.17g)", n, measured, at_one, special)
            witnesses_hold = False

    note = (
        f"band_tol={band_tol:g} and slope_tol={slope_tol:g} are engineering tolerances; "
        "the tight bound carries no explicit constants or convergence rate"
    )
    return _with_parts(
        combined, "theorem1", (even, odd),
        checks={"odd_lower_bound_witnesses": witnesses_hold}, note=note,
    )


def _theta_series(params, n_values, interval_of, weight_kind, exponent, grid_points):
    records = []
    for n in n_values:
        estimate = weighted_theta_estimate(params, n, interval_of(n), weight_kind, grid_points)
        records.append(make_record(n, estimate.value, exponent, estimate.argmax_t))
    return records


def verify_lemma1(
    params: JacobiParams,
    n_values=None,
    band_tol: float | None = None,
    grid_points: int | None = None,
) -> AsymptoticReport:
    """sin(theta/2)-weighted maxima of |P_n(cos theta)| on [0, pi/2] and [pi/2, pi].

    For alpha > 1/2 they are O(n^(alpha-1)) and O(n^max(beta,-1/2)); both ratio series
    must stay below band_tol times their first value.
    """
    settings = get_settings().asymptotics
    band_tol = settings.band_tol if band_tol is None else band_tol
    if params.alpha <= 0.5:
        raise DomainError(f"the sin(theta/2)-weighted bound requires alpha > 1/2, got alpha={params.alpha}")
    n_values = check_n_values(settings.fact_n_values if n_values is None else n_values)

    near_exponent = params.alpha - 1.0
    far_exponent = max(params.beta, -0.5)
    near = series_report(
        "weighted_near_one", params,
        _theta_series(params, n_values, lambda n: ThetaInterval(lo=0.0, hi=math.pi / 2),
                      WeightKind.SIN_HALF_THETA, near_exponent, grid_points),
        near_exponent, band_tol, rule="upper",
    )
    far = series_report(
        "weighted_near_minus_one", params,
        _theta_series(params, n_values, lambda n: ThetaInterval(lo=math.pi / 2, hi=math.pi),
                      WeightKind.SIN_HALF_THETA, far_exponent, grid_points),
        far_exponent, band_tol, rule="upper",
    )
    return _with_parts(near, "lemma1", (near, far))


def _endpoint_check(params, n_values, band_tol, grid_points) -> AsymptoticReport:
    a, b = params.alpha, params.beta
    if a >= b and a >= -0.5:
        exponent, use_plus = a, True
    elif b >= a and b >= -0.5:
        exponent, use_plus = b, False
    else:
        return _not_applicable(
            "endpoint_maximum", params, max(a, b), band_tol,
            "the endpoint location of the maximum needs max(alpha, beta) >= -1/2",
        )
    records, exact = [], True
    for n in n_values:
        estimate = sup_norm(lambda t: jacobi_values(a, b, n, t), n, grid_points)
        at_plus_one, abs_at_minus_one = jacobi_endpoint_values(params, n)
        closed = at_plus_one if use_plus else abs_at_minus_one
        if abs(estimate.value - closed) > ENDPOINT_TOLERANCE * closed:
            logger.warning("n=%d: grid maximum %.17g differs from endpoint value %.17g", n, estimate.value, closed)
            exact = False
        records.append(make_record(n, estimate.value, exponent, estimate.argmax_t))
    branch = "alpha >= beta: maximum at t = 1" if use_plus else "alpha <= beta: maximum at t = -1"
    report = series_report("endpoint_maximum", params, records, exponent, band_tol, rule="two_sided", note=branch)
    return report.model_copy(
        update={
            "verdict": report.verdict if exact else Verdict.FAIL,
            "tolerance_used": ENDPOINT_TOLERANCE,
            "checks": {"endpoint_equality": exact},
        }
    )


def _special_point_check(params, n_values, band_tol) -> AsymptoticReport:
    if params.alpha <= -0.5:
        return _not_applicable(
            "special_point", params, params.alpha, band_tol,
            "the special-point estimate needs alpha > -1/2",
        )
    records = [
        make_record(n, abs(float(jacobi_values(params.alpha, params.beta, n, math.cos(1.0 / n)))), params.alpha)
        for n in n_values
    ]
    return series_report("special_point", params, records, params.alpha, band_tol, rule="two_sided")


def verify_jacobi_facts(
    params: JacobiParams,
    n_values=None,
    band_tol: float | None = None,
    grid_points: int | None = None,
) -> AsymptoticReport:
    """Endpoint maximum, half-segment bound, special-point growth and theta-region bounds.

    The top-level records are the half-segment series max_{0<=t<=1} |P_n| / n^max(alpha,-1/2);
    the four checks are nested and the verdict is their conjunction (not_applicable is neutral).
    """
    settings = get_settings().asymptotics
    band_tol = settings.band_tol if band_tol is None else band_tol
    n_values = check_n_values(settings.fact_n_values if n_values is None else n_values)
    a = params.alpha

    endpoint = _endpoint_check(params, n_values, band_tol, grid_points)

    half_exponent = max(a, -0.5)
    half_segment = series_report(
        "half_segment", params,
        _theta_series(params, n_values, lambda n: ThetaInterval(lo=0.0, hi=math.pi / 2),
                      WeightKind.NONE, half_exponent, grid_points),
        half_exponent, band_tol, rule="upper",
    )

    special = _special_point_check(params, n_values, band_tol)

    dynamic = series_report(
        "theta_power", params,
        _theta_series(params, n_values, lambda n: ThetaInterval(lo=1.0 / n, hi=math.pi / 2),
                      WeightKind.THETA_POWER, -0.5, grid_points),
        -0.5, band_tol, rule="upper",
    )
    origin = series_report(
        "near_zero", params,
        _theta_series(params, n_values, lambda n: ThetaInterval(lo=0.0, hi=1.0 / n),
                      WeightKind.NONE, a, grid_points),
        a, band_tol, rule="upper",
    )
    theta_regions = _with_parts(dynamic, "theta_regions", (dynamic, origin))

    return _with_parts(half_segment, "jacobi_facts", (endpoint, half_segment, special, theta_regions))


def verify_coefficient_growth(
    params: GegenParams,
    n_values=None,
    band_tol: float | None = None,
    slope_tol: float | None = None,
) -> AsymptoticReport:
    """a~_{2n} / n^(1/2) and a~_{2n+1} / n^(1/2) must both stay within max/min <= band_tol.

    With slope_tol the fitted exponent of each parity must also lie within slope_tol of 1/2.
    """
    settings = get_settings().asymptotics
    band_tol = settings.band_tol if band_tol is None else band_tol
    n_values = check_n_values(log_spaced_counts(10, 100_000, 16) if n_values is None else n_values)

    def parity(label, shift):
        records = [make_record(n, orthonormal_coefficient(params, 2 * n + shift).value, 0.5) for n in n_values]
        return series_report(
            label, params, records, 0.5, band_tol,
            rule="two_sided", slope_tol=slope_tol, fit_min_n=settings.fit_min_n,
        )

    even = parity("coefficient_growth_even", 0)
    odd = parity("coefficient_growth_odd", 1)
    return _with_parts(even, "coefficient_growth", (even, odd))


# Registry used by the command line `verify` subcommand.
verification_definitions = [
    {
        "func": verify_theorem1,
        "name": "theorem1",
        "family": "gengeg",
        "description": "Sup norm of the orthonormal generalized Gegenbauer polynomials grows like n^max(lambda, mu).",
    },
    {
        "func": verify_lemma1,
        "name": "lemma1",
        "family": "jacobi",
        "description": "sin(theta/2)-weighted Jacobi maxima on [0, pi/2] and [pi/2, pi] (alpha > 1/2).",
    },
    {
        "func": verify_jacobi_facts,
        "name": "jacobi-facts",
        "family": "jacobi",
        "description": "Endpoint maximum, half-segment bound, special-point growth and theta-region bounds.",
    },
    {
        "func": verify_coefficient_growth,
        "name": "coefficient-growth",
        "family": "gengeg",
        "description": "Orthonormalizing coefficients grow like n^(1/2) for both parities.",
    },
]

"""Integrals against v_{lambda,mu} through the substitution u = 2t^2 - 1.

int g(t^2) |t|^(2mu) (1-t^2)^(lambda-1/2) dt
    = 2^-(lambda+mu) int g((1+u)/2) (1-u)^(lambda-1/2) (1+u)^(mu-1/2) du,

so the singular weight is never sampled: every integral becomes a Gauss-Jacobi
problem with exponents (lambda-1/2, mu-1/2), or (lambda-1/2, mu+1/2) once the
extra t^2 = (1+u)/2 of an odd-odd product is absorbed into the weight.
"""
import math

import numpy as np

from gengeg_analysis.exception.exception import ComputationError
from gengeg_analysis.polynomials.gegenbauer import orthonormal_coefficient
from gengeg_analysis.polynomials.jacobi import check_degree, jacobi_table
from gengeg_analysis.polynomials.params import GegenParams
from gengeg_analysis.quadrature.gauss_jacobi import gauss_jacobi_rule


def integrate_gengeg_weight_even(params: GegenParams, g, m: int) -> float:
    """int g(t^2) v_{lambda,mu}(t) dt over [-1, 1]; g receives s = t^2 in [0, 1]."""
    rule = gauss_jacobi_rule(params.even_jacobi(), m)
    values = np.broadcast_to(np.asarray(g(0.5 * (1.0 + rule.nodes)), dtype=float), rule.nodes.shape)
    if not np.all(np.isfinite(values)):
        raise ComputationError("integrand is not finite at every quadrature node")
    return 2.0 ** -(params.lam + params.mu) * math.fsum(rule.weights * values)


def _parity_block(params: GegenParams, indices, m: int, odd: bool) -> np.ndarray:
    inner = params.odd_jacobi() if odd else params.even_jacobi()
    rule = gauss_jacobi_rule(inner, m)
    degrees = [n // 2 for n in indices]
    table = jacobi_table(inner.alpha, inner.beta, max(degrees), rule.nodes)[degrees]
    coefficients = np.array([orthonormal_coefficient(params, n).value for n in indices])
    scale = 2.0 ** -(params.lam + params.mu) * (0.5 if odd else 1.0)
    block = (table * rule.weights) @ table.T
    return scale * np.outer(coefficients, coefficients) * block


def gram_matrix_orthonormal(params: GegenParams, n_max: int, m: int) -> np.ndarray:
    """Entries int C~_i C~_j v_{lambda,mu}, i, j = 0..n_max; mixed parity entries are exactly 0."""
    n_max = check_degree(n_max, "n_max")
    if m < n_max + 8:
        raise ComputationError(
            f"gram_matrix_orthonormal needs at least n_max + 8 = {n_max + 8} quadrature points, got {m}"
        )
    gram = np.zeros((n_max + 1, n_max + 1))
    even = list(range(0, n_max + 1, 2))
    odd = list(range(1, n_max + 1, 2))
    gram[np.ix_(even, even)] = _parity_block(params, even, m, odd=False)
    if odd:
        gram[np.ix_(odd, odd)] = _parity_block(params, odd, m, odd=True)
    return gram

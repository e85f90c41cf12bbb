"""
Gamma-family functions for the secrecy-rate analysis.
Log-gamma and the regularized incomplete gamma functions P(a, x) and Q(a, x).
"""

import logging
import math

import numpy as np
from scipy import special

from simulator.errors import DomainError

# Configure logging
logger = logging.getLogger(__name__)

_EPS = 1.0e-16
_FPMIN = 1.0e-300
# Series and continued fraction both need O(sqrt(a)) iterations near x = a.
_MAX_ITERATIONS = 10000


def ln_gamma(a: float) -> float:
    """
    Natural logarithm of the Gamma function.

    Args:
        a: Positive argument

    Returns:
        ln Gamma(a)
    """
    if not math.isfinite(a) or a <= 0.0:
        raise DomainError(f"ln_gamma requires a finite positive argument, got {a}")
    return float(special.gammaln(a))


def _check_gamma_args(a: float, x: float):
    if not math.isfinite(a) or a <= 0.0:
        raise DomainError(f"Incomplete gamma requires a > 0, got a={a}")
    if math.isnan(x) or x < 0.0:
        raise DomainError(f"Incomplete gamma requires x >= 0, got x={x}")


def _log_prefactor(a: float, x: float) -> float:
    # ln(x^a e^{-x} / Gamma(a)); keeps Gamma(Ka) from overflowing for large K
    return a * math.log(x) - x - ln_gamma(a)


def _series(a: float, x: float) -> float:
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(_MAX_ITERATIONS):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            return math.exp(_log_prefactor(a, x) + math.log(total))
    raise DomainError(f"Incomplete gamma series did not converge for a={a}, x={x}")


def _continued_fraction(a: float, x: float) -> float:
    # Modified Lentz evaluation of the Legendre continued fraction for Q(a, x)
    b = x + 1.0 - a
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITERATIONS + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return math.exp(_log_prefactor(a, x) + math.log(h))
    raise DomainError(f"Incomplete gamma continued fraction did not converge for a={a}, x={x}")


def reg_lower_gamma(a: float, x: float) -> float:
    """
    Regularized lower incomplete gamma function P(a, x).

    Uses the power series below x = a + 1 and the continued fraction for
    Q(a, x) above it, both evaluated in log space.

    Args:
        a: Shape, a > 0
        x: Upper limit, x >= 0

    Returns:
        P(a, x) in [0, 1]
    """
    _check_gamma_args(a, x)
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return 1.0
    if x < a + 1.0:
        return min(1.0, _series(a, x))
    return max(0.0, 1.0 - _continued_fraction(a, x))


def reg_upper_gamma(a: float, x: float) -> float:
    """
    Regularized upper incomplete gamma function Q(a, x) = 1 - P(a, x).

    Args:
        a: Shape, a > 0
        x: Lower limit, x >= 0

    Returns:
        Q(a, x) in [0, 1]
    """
    _check_gamma_args(a, x)
    if x == 0.0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if x < a + 1.0:
        return max(0.0, 1.0 - _series(a, x))
    return min(1.0, _continued_fraction(a, x))


reg_lower_gamma_array = np.vectorize(reg_lower_gamma, otypes=[float])

"""
Exponential integral Ei for the eavesdropper rate expressions.
Includes the jointly evaluated product e^t Ei(-t) used to avoid overflow.
"""

import logging
import math

import numpy as np

from simulator.errors import DomainError

# Configure logging
logger = logging.getLogger(__name__)

EULER_GAMMA = 0.57721566490153286061
_EPS = 1.0e-16
_FPMIN = 1.0e-300
_MAX_ITERATIONS = 10000
# Above this the positive-axis asymptotic series is accurate to machine precision.
_ASYMPTOTIC_THRESHOLD = 40.0


def _e1_series(t: float) -> float:
    # E1(t) = -gamma - ln t - sum_{k>=1} (-t)^k / (k k!), used for 0 < t <= 1
    total = 0.0
    term = 1.0
    for k in range(1, _MAX_ITERATIONS + 1):
        term *= -t / k
        contribution = term / k
        total += contribution
        if abs(contribution) < abs(total) * _EPS:
            break
    return -EULER_GAMMA - math.log(t) - total


def _scaled_e1_continued_fraction(t: float) -> float:
    # Lentz evaluation of e^t E1(t) for t > 1; never forms e^t on its own
    b = t + 1.0
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITERATIONS + 1):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h
    raise DomainError(f"Exponential integral continued fraction did not converge for t={t}")


def exp_ei_product(t: float) -> float:
    """
    Evaluate e^t * Ei(-t) for t > 0 as a single quantity.

    The value is negative and behaves like -1/t for large t and like
    ln t + gamma near zero.

    Args:
        t: Positive argument

    Returns:
        e^t Ei(-t)
    """
    if not math.isfinite(t) or t <= 0.0:
        raise DomainError(f"exp_ei_product requires a finite positive argument, got {t}")
    if t <= 1.0:
        return -math.exp(t) * _e1_series(t)
    return -_scaled_e1_continued_fraction(t)


def exp_integral_ei(x: float) -> float:
    """
    Exponential integral Ei(x) for nonzero real x.

    Args:
        x: Nonzero argument

    Returns:
        Ei(x)
    """
    if math.isnan(x) or x == 0.0:
        raise DomainError(f"Ei is singular at x={x}")
    if x == -math.inf:
        return 0.0
    if x < 0.0:
        t = -x
        if t <= 1.0:
            return -_e1_series(t)
        return -math.exp(-t) * _scaled_e1_continued_fraction(t)

    if x <= _ASYMPTOTIC_THRESHOLD:
        total = 0.0
        term = 1.0
        for k in range(1, _MAX_ITERATIONS + 1):
            term *= x / k
            contribution = term / k
            total += contribution
            if contribution < total * _EPS:
                break
        return EULER_GAMMA + math.log(x) + total

    if x > 709.0:
        return math.inf

    # Asymptotic e^x/x * sum k!/x^k, truncated at the smallest term
    total = 1.0
    term = 1.0
    for k in range(1, int(x)):
        previous = term
        term *= k / x
        if term > previous or term < _EPS:
            break
        total += term
    return math.exp(x) / x * total


exp_ei_product_array = np.vectorize(exp_ei_product, otypes=[float])

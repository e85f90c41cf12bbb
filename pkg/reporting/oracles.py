"""
Adaptive-quadrature reference values for the closed-form rate evaluators.
Each oracle integrates the defining expectation directly with scipy.
"""

import math

import numpy as np
from scipy import integrate, special

from analysis.bounds.lemma import MU, NU
from analysis.bounds.theorem import AnalyticInputs

QUAD_LIMIT = 400


def _scheduled_cdf(x: float, K: int, N: int) -> float:
    return float(special.gammainc(K * MU, math.sqrt(max(x, 0.0)) / NU)) ** N


def _halfline(f, scale: float) -> float:
    # Break points at multiples of the integrand's natural scale
    edges = [0.0, 0.1 * scale, scale, 3.0 * scale, 10.0 * scale, 100.0 * scale]
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += integrate.quad(f, lo, hi, limit=QUAD_LIMIT, epsabs=0.0, epsrel=1e-10)[0]
    total += integrate.quad(f, edges[-1], np.inf, limit=QUAD_LIMIT)[0]
    return total


def q_m_oracle(rho: float, K: int, N: int) -> float:
    """E[ln(1 + rho zeta_max)] as the integral of rho (1 - F(x)) / (1 + rho x)."""
    def integrand(x: float) -> float:
        return rho * (1.0 - _scheduled_cdf(x, K, N)) / (1.0 + rho * x)

    return _halfline(integrand, (K * MU * NU) ** 2)


def j1_oracle(inputs: AnalyticInputs) -> float:
    """
    E[ln(1 + Y / (X + c0))] with X ~ Exp(sigma_e^2), Y ~ Exp(sigma_e'^2).

    The expectation over Y is e^{w/s'} E1(w/s'); the one over X is numerical.
    """
    s, sp = inputs.sigma_e2, inputs.sigma_ep2
    c0 = 1.0 / inputs.snr.rho_0

    def integrand(x: float) -> float:
        z = (x + c0) / sp
        if z > 700.0:
            inner = 1.0 / z
        else:
            inner = math.exp(z) * float(special.exp1(z))
        return math.exp(-x / s) / s * inner

    return _halfline(integrand, s)


def j2_oracle(inputs: AnalyticInputs) -> float:
    """
    Rate Eve gains from successive decoding, as a nested integral.

    Outer variable alpha = gamma_e1, inner variable the B-to-Eve power x; the
    integrand is the raw joint density times the rate difference
    ln(1 + rho0 x) - ln(1 + x / (alpha (x + c0) + c0)).
    """
    s, sp = inputs.sigma_e2, inputs.sigma_ep2
    rho0 = inputs.snr.rho_0
    rho_ab = inputs.snr.rho_ab
    c0 = 1.0 / rho0
    K, N = inputs.K, inputs.N

    def inner(x: float, alpha: float) -> float:
        w = x + c0
        density = math.exp(-x / sp - alpha * w / s) * w / (s * sp)
        gain = math.log1p(rho0 * x) - math.log1p(x / (alpha * w + c0))
        return density * gain

    def outer(alpha: float) -> float:
        cdf = _scheduled_cdf(alpha / rho_ab, K, N)
        if cdf == 0.0:
            return 0.0
        scale = min(sp, s / alpha)
        value = integrate.quad(inner, 0.0, 50.0 * scale, args=(alpha,), limit=QUAD_LIMIT, epsrel=1e-10)[0]
        value += integrate.quad(inner, 50.0 * scale, np.inf, args=(alpha,), limit=QUAD_LIMIT)[0]
        return cdf * value

    return _halfline(outer, rho_ab * (K * MU * NU) ** 2)

"""
Average-secrecy-rate lower bounds for the proposed two-way scheme.
Legitimate and eavesdropper ergodic rates via closed forms and G-C quadrature.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

from analysis.bounds.lemma import MU, NU, scheduled_cdf
from analysis.specfun.expint import exp_ei_product
from analysis.specfun.quadrature import QuadratureRule, gc_integrate_halfline, gc_rule
from simulator.errors import ContractError, DomainError
from simulator.network.geometry import NetworkGeometry
from simulator.network.pathloss import make_pathloss
from simulator.schemes.sinr import SnrSet, make_snr_set

# Configure logging
logger = logging.getLogger(__name__)

# Relative gap below which sigma_e^2 and sigma_e'^2 are treated as equal
DEGENERATE_VARIANCE_TOL = 1.0e-9


def _scaled_e1(z: float) -> float:
    """e^z E1(z) > 0."""
    return -exp_ei_product(z)


def _zeta_scale(K: int) -> float:
    # Square of the Gamma-approximation mean of sqrt(zeta)
    return (K * MU * NU) ** 2


@dataclass(frozen=True)
class AnalyticInputs:
    """Inputs shared by the eavesdropper-rate evaluators."""
    snr: SnrSet
    sigma_e2: float
    sigma_ep2: float
    K: int
    N: int
    M: int
    rule: QuadratureRule

    def __post_init__(self):
        """Validate the inputs."""
        if self.sigma_e2 <= 0.0 or self.sigma_ep2 <= 0.0:
            raise DomainError("Effective Eve channel variances must be positive")
        if self.K < 1 or self.N < 1:
            raise DomainError("K and N must be positive")
        if self.rule.order != self.M:
            raise ContractError(f"Quadrature rule order {self.rule.order} differs from M={self.M}")


@dataclass(frozen=True)
class BoundBreakdown:
    """Every term of the two ASR lower bounds, in nats."""
    q_m_s1: float
    q_m_s2: float
    q_e1: float
    j1: float
    j2: float
    r_s1: float
    r_s2: float

    @property
    def q_e2(self) -> float:
        return self.j1 + self.j2

    @property
    def sum_rate(self) -> float:
        return self.r_s1 + self.r_s2


def q_m(rho: float, K: int, N: int, rule: QuadratureRule) -> float:
    """
    Ergodic rate E[ln(1 + rho * zeta_max)] of the scheduled pair.

    Evaluates the half-line integral of rho (1 - F(x)) / (1 + rho x), with F
    the scheduled-gain CDF. The integration variable is scaled to the typical
    gain and the part rho e^{-x/s} / (1 + rho x) is integrated in closed form,
    so the quadrature only sees a bounded, smooth remainder.

    Args:
        rho: Transmit SNR times IRS pathloss
        K: Number of elements
        N: Number of pairs
        rule: Quadrature rule

    Returns:
        Rate in nats
    """
    if not rho > 0.0:
        raise DomainError(f"q_m requires rho > 0, got {rho}")
    scale = _zeta_scale(K)
    rs = rho * scale
    closed_part = _scaled_e1(1.0 / rs)

    def remainder(u: float) -> float:
        tail = 1.0 - scheduled_cdf(scale * u, K, N)
        return rs * (tail - math.exp(-u)) / (1.0 + rs * u)

    return closed_part + gc_integrate_halfline(remainder, rule)


def q_e1(rho0: float, sigma_e2: float, sigma_ep2: float) -> float:
    """
    Eavesdropper ergodic rate for s1, E[ln(1 + gamma_e1)], in closed form.

    Args:
        rho0: P / sigma_0^2
        sigma_e2: Variance of the effective A-to-Eve channel
        sigma_ep2: Variance of the effective B-to-Eve channel

    Returns:
        Rate in nats
    """
    if min(rho0, sigma_e2, sigma_ep2) <= 0.0:
        raise DomainError("q_e1 requires positive rho0 and variances")
    b = 1.0 / (rho0 * sigma_e2)
    if abs(sigma_e2 - sigma_ep2) <= DEGENERATE_VARIANCE_TOL * max(sigma_e2, sigma_ep2):
        return 1.0 - b * _scaled_e1(b)
    bp = 1.0 / (rho0 * sigma_ep2)
    return sigma_e2 / (sigma_e2 - sigma_ep2) * (_scaled_e1(b) - _scaled_e1(bp))


def j1_term(inputs: AnalyticInputs) -> float:
    """
    Eve's s2 rate when s1 is treated as interference, E[ln(1 + |psi|^2 / (|phi|^2 + 1/rho0))].

    The inner expectation over |phi|^2 is closed form; the outer one runs on
    the G-C rule in units of sigma_e'^2 after its logarithmic behaviour near
    zero is removed in closed form.
    """
    s = inputs.sigma_e2
    sp = inputs.sigma_ep2
    rho0 = inputs.snr.rho_0
    ratio = sp / s
    eps = 1.0 / (rho0 * s)

    log_part = -math.log(eps) - _scaled_e1(eps / ratio)

    def remainder(u: float) -> float:
        z = ratio * u + eps
        return math.exp(-u) * (_scaled_e1(z) + math.log(z))

    return ratio * (log_part + gc_integrate_halfline(remainder, inputs.rule))


def j2_term(inputs: AnalyticInputs) -> float:
    """
    Extra s2 rate Eve gains on trials where it can strip s1 first.

    Integrates over alpha = gamma_e1 the product of the scheduled-SINR CDF,
    the gamma_e1 density, the noise factor and the closed-form inner
    expectation Delta(alpha) with tau(alpha) = 1/(rho0 s' alpha) + 1/(rho0 s).
    """
    s = inputs.sigma_e2
    sp = inputs.sigma_ep2
    rho0 = inputs.snr.rho_0
    rho_ab = inputs.snr.rho_ab
    K, N = inputs.K, inputs.N
    scale = rho_ab * _zeta_scale(K)

    def integrand(u: float) -> float:
        alpha = scale * u
        cdf = scheduled_cdf(alpha / rho_ab, K, N)
        if cdf == 0.0:
            return 0.0
        tau = 1.0 / (rho0 * sp * alpha) + 1.0 / (rho0 * s)
        delta = 1.0 + (1.0 - tau) * _scaled_e1(tau * (1.0 + alpha))
        density = s * sp / (s + alpha * sp) ** 2
        return scale * cdf * density * math.exp(-alpha / (rho0 * s)) * delta

    return gc_integrate_halfline(integrand, inputs.rule)


def q_e2(inputs: AnalyticInputs) -> float:
    """Eavesdropper ergodic rate for s2 under successive decoding, J1 + J2."""
    return j1_term(inputs) + j2_term(inputs)


def analytic_inputs(params, geometry: NetworkGeometry, pair: int = 0) -> AnalyticInputs:
    """
    Collect the analytic inputs of one pair of a fixed geometry.

    Args:
        params: SystemParams
        geometry: Fixed NetworkGeometry
        pair: Pair index

    Returns:
        AnalyticInputs
    """
    if not geometry.fixed:
        raise ContractError("Closed-form bounds need deterministic distances; use the fixed geometry mode")
    pathloss = make_pathloss(geometry, params)
    pair = pathloss.check_pair(pair)
    K = params.elements
    return AnalyticInputs(
        snr=make_snr_set(params, pathloss, pair),
        sigma_e2=float(pathloss.beta_irs_ae[pair]) * K + float(pathloss.beta_dir_ae[pair]),
        sigma_ep2=float(pathloss.beta_irs_be[pair]) * K + float(pathloss.beta_dir_be[pair]),
        K=K,
        N=params.pairs,
        M=params.quad_order,
        rule=gc_rule(params.quad_order),
    )


def bound_breakdown(params, geometry: NetworkGeometry) -> BoundBreakdown:
    """
    Evaluate every term of the ASR lower bounds.

    Args:
        params: SystemParams
        geometry: Fixed NetworkGeometry

    Returns:
        BoundBreakdown in nats
    """
    inputs = analytic_inputs(params, geometry)
    qm1 = q_m(inputs.snr.rho_ab, inputs.K, inputs.N, inputs.rule)
    qm2 = q_m(inputs.snr.rho_ba, inputs.K, inputs.N, inputs.rule)
    qe1 = q_e1(inputs.snr.rho_0, inputs.sigma_e2, inputs.sigma_ep2)
    j1 = j1_term(inputs)
    j2 = j2_term(inputs)
    breakdown = BoundBreakdown(
        q_m_s1=qm1,
        q_m_s2=qm2,
        q_e1=qe1,
        j1=j1,
        j2=j2,
        r_s1=max(0.0, qm1 - qe1),
        r_s2=max(0.0, qm2 - (j1 + j2)),
    )
    logger.debug(f"Bounds at P={params.power_dbm} dBm: {breakdown}")
    return breakdown


def theorem1_bounds(params, geometry: NetworkGeometry) -> Tuple[float, float]:
    """ASR lower bounds (r_s1, r_s2) in nats for a fixed geometry."""
    breakdown = bound_breakdown(params, geometry)
    return breakdown.r_s1, breakdown.r_s2

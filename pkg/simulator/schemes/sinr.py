"""
SINR building blocks shared by all transmission schemes.
Legitimate and eavesdropper SINRs, pair scheduling and SNR constants.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from simulator.channels.reflection import EveEffective
from simulator.errors import ContractError, DomainError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnrSet:
    """Transmit SNR constants of one pair: rho_ab, rho_ba and rho_0 = P / sigma_0^2."""
    rho_ab: float
    rho_ba: float
    rho_0: float

    def __post_init__(self):
        """Validate the constants."""
        if min(self.rho_ab, self.rho_ba, self.rho_0) <= 0.0:
            raise DomainError("SNR constants must be strictly positive")


def make_snr_set(params, pathloss, pair: int = 0) -> SnrSet:
    """
    SNR constants of a pair with the RLI folded into the denominator.

    Args:
        params: SystemParams
        pathloss: PathlossSet
        pair: Pair index

    Returns:
        SnrSet
    """
    pair = pathloss.check_pair(pair)
    interference = params.rli_w + params.noise_w
    return SnrSet(
        rho_ab=params.power_w * float(pathloss.beta_irs_ab[pair]) / interference,
        rho_ba=params.power_w * float(pathloss.beta_irs_ba[pair]) / interference,
        rho_0=params.power_w / params.noise_w,
    )


def legit_sinrs(
    zeta: float,
    snr: SnrSet,
    rli_mode: str,
    rli_draws: Optional[Tuple[complex, complex]] = None,
    *,
    noise_w: float = 0.0,
    power_w: float = 0.0,
    pathloss=None,
    pair: int = 0,
) -> Tuple[float, float]:
    """
    SINRs at A (decoding s2) and B (decoding s1) after self-interference
    cancellation.

    Args:
        zeta: Cascaded gain of the scheduled pair
        snr: SnrSet of the pair (deterministic RLI)
        rli_mode: "deterministic" or "sampled"
        rli_draws: (l_A, l_B) residual loop-interference samples, sampled mode only
        noise_w: Noise variance in watts (sampled mode)
        power_w: Transmit power in watts (sampled mode)
        pathloss: PathlossSet (sampled mode)
        pair: Pair index (sampled mode)

    Returns:
        Tuple of (gamma_a, gamma_b)
    """
    if zeta < 0.0:
        raise ContractError(f"Cascaded gain must be non-negative, got {zeta}")
    if str(getattr(rli_mode, "value", rli_mode)) != "sampled":
        return snr.rho_ab * zeta, snr.rho_ba * zeta

    if rli_draws is None or pathloss is None:
        raise ContractError("Sampled RLI mode needs loop-interference draws and the pathloss set")
    rli_a, rli_b = rli_draws
    gamma_a = power_w * float(pathloss.beta_irs_ab[pair]) * zeta / (abs(rli_a) ** 2 + noise_w)
    gamma_b = power_w * float(pathloss.beta_irs_ba[pair]) * zeta / (abs(rli_b) ** 2 + noise_w)
    return gamma_a, gamma_b


def eve_sinrs(eff: EveEffective, gamma_a: float, power_w: float, noise_w: float) -> Tuple[float, float, bool]:
    """
    Eavesdropper SINRs under successive interference cancellation.

    Eve first decodes s1 treating s2 as interference; it removes s1 only when
    its SINR is at least the legitimate one.

    Args:
        eff: Effective Eve channels
        gamma_a: Legitimate SINR the s1 rate is matched to
        power_w: Transmit power in watts
        noise_w: Noise variance in watts

    Returns:
        Tuple of (gamma_e1, gamma_e2, decoded)
    """
    phi2 = abs(eff.phi) ** 2
    psi2 = abs(eff.psi) ** 2
    gamma_e1 = power_w * phi2 / (power_w * psi2 + noise_w)
    if gamma_e1 < gamma_a:
        return gamma_e1, power_w * psi2 / (power_w * phi2 + noise_w), False
    return gamma_e1, power_w * psi2 / noise_w, True


def schedule(zetas: Sequence[float]) -> int:
    """
    Index of the pair with the largest cascaded gain; ties go to the lowest index.

    Args:
        zetas: One value per pair

    Returns:
        Scheduled pair index
    """
    values = np.asarray(zetas, dtype=float)
    if values.size == 0:
        raise ContractError("Cannot schedule an empty set of pairs")
    return int(np.argmax(values))

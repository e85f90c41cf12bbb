"""
Amplify-and-forward relay baselines (full- and half-duplex).
The relay sits at the IRS position with K antennas and MRC/MRT beamforming.
"""

import logging
from dataclasses import dataclass

import numpy as np

from simulator.channels.fading import ChannelRealization
from simulator.errors import DegenerateGeometryError
from simulator.network.geometry import NetworkGeometry
from simulator.network.pathloss import make_pathloss
from simulator.schemes.base import TrialOutcome
from simulator.settings.system_config import Scheme

# Configure logging
logger = logging.getLogger(__name__)

HD_PRELOG = 0.5


@dataclass(frozen=True)
class RelayChannels:
    """Scalar channel statistics of the relayed pair after beamforming."""
    norm_h2: float
    norm_g2: float
    gu2: float
    heu2: float
    h_ne: complex
    g_ne: complex


def relay_channels(realization: ChannelRealization, pair: int) -> RelayChannels:
    """
    Collapse the relay vectors of a pair with the receive beam u = h^H / ||h||.

    Args:
        realization: Fading draw
        pair: Relayed pair index

    Returns:
        RelayChannels
    """
    h = realization.h[pair]
    g = realization.g[pair]
    norm_h = float(np.linalg.norm(h))
    norm_g = float(np.linalg.norm(g))
    if norm_h == 0.0 or norm_g == 0.0:
        raise DegenerateGeometryError(f"Zero-norm relay channel for pair {pair}")
    u = np.conj(h) / norm_h
    return RelayChannels(
        norm_h2=norm_h ** 2,
        norm_g2=norm_g ** 2,
        gu2=float(abs(np.dot(g, u)) ** 2),
        heu2=float(abs(np.dot(realization.h_e, u)) ** 2),
        h_ne=complex(realization.h_ne[pair]),
        g_ne=complex(realization.g_ne[pair]),
    )


def amplification_sq(power: float, b_ar: float, b_br: float, ch: RelayChannels, relay_interference: float) -> float:
    """
    Squared AF gain kappa^2 meeting the relay power constraint.

    ``relay_interference`` is sigma_l^2 + sigma_0^2 for the full-duplex relay
    and sigma_0^2 for the half-duplex one.
    """
    return power / (power * b_ar * ch.norm_h2 + power * b_br * ch.norm_g2 + relay_interference)


def fd_relay_trial(
    realization: ChannelRealization,
    geometry: NetworkGeometry,
    params,
    pathloss=None,
    pair: int = 0,
) -> TrialOutcome:
    """
    Run one trial of the full-duplex AF relay baseline.

    Args:
        realization: Fading draw for all pairs
        geometry: Node geometry
        params: SystemParams
        pathloss: Precomputed PathlossSet for ``geometry`` (optional)
        pair: Relayed pair, chosen independently of the channels

    Returns:
        TrialOutcome
    """
    pathloss = pathloss or make_pathloss(geometry, params)
    pair = pathloss.check_pair(pair)
    ch = relay_channels(realization, pair)

    power, noise, rli = params.power_w, params.noise_w, params.rli_w
    b_ar = float(pathloss.beta_ar[pair])
    b_br = float(pathloss.beta_br[pair])
    b_ae = float(pathloss.beta_dir_ae_relay[pair])
    b_be = float(pathloss.beta_dir_be_relay[pair])
    b_re = float(pathloss.beta_re)

    kappa2 = amplification_sq(power, b_ar, b_br, ch, rli + noise)
    kappa = np.sqrt(kappa2)
    relay_noise = rli + noise

    gamma_a = b_ar * b_br * kappa2 * power * ch.norm_h2 * ch.norm_g2 \
        / ((b_ar * kappa2 * ch.norm_h2 + 1.0) * relay_noise)
    gamma_b = b_ar * b_br * kappa2 * power * ch.norm_h2 * ch.gu2 \
        / ((b_br * kappa2 * ch.gu2 + 1.0) * relay_noise)

    heu = np.sqrt(ch.heu2)
    from_a = abs(np.sqrt(b_ae) * ch.h_ne + np.sqrt(b_ar * b_re) * kappa * np.sqrt(ch.norm_h2) * heu) ** 2
    from_b = abs(np.sqrt(b_be) * ch.g_ne + np.sqrt(b_br * b_re) * kappa * np.sqrt(ch.norm_g2) * heu) ** 2
    forwarded_noise = b_re * kappa2 * ch.heu2 * relay_noise
    gamma_e1 = power * from_a / (power * from_b + forwarded_noise + noise)
    gamma_e2 = power * from_b / (forwarded_noise + noise)

    return TrialOutcome.from_sinrs(Scheme.FD_RELAY, pair, gamma_a, gamma_b, gamma_e1, gamma_e2, params.log_base)


def hd_relay_trial(
    realization: ChannelRealization,
    geometry: NetworkGeometry,
    params,
    pathloss=None,
    pair: int = 0,
) -> TrialOutcome:
    """
    Run one trial of the half-duplex AF relay baseline.

    Eve combines what it overhears in both phases, so each Eve SINR is the sum
    of a direct and a relayed term.

    Args:
        realization: Fading draw for all pairs
        geometry: Node geometry
        params: SystemParams
        pathloss: Precomputed PathlossSet for ``geometry`` (optional)
        pair: Relayed pair, chosen independently of the channels

    Returns:
        TrialOutcome with the 1/2 pre-log applied
    """
    pathloss = pathloss or make_pathloss(geometry, params)
    pair = pathloss.check_pair(pair)
    ch = relay_channels(realization, pair)

    power, noise = params.power_w, params.noise_w
    rho0 = power / noise
    b_ar = float(pathloss.beta_ar[pair])
    b_br = float(pathloss.beta_br[pair])
    b_ae = float(pathloss.beta_dir_ae_relay[pair])
    b_be = float(pathloss.beta_dir_be_relay[pair])
    b_re = float(pathloss.beta_re)

    # Half-duplex relay has no loop interference
    inv_kappa2 = 1.0 / amplification_sq(power, b_ar, b_br, ch, noise)

    gamma_a = rho0 * b_ar * b_br * ch.norm_h2 * ch.norm_g2 / (b_ar * ch.norm_h2 + inv_kappa2)
    gamma_b = rho0 * b_ar * b_br * ch.norm_h2 * ch.gu2 / (b_br * ch.gu2 + inv_kappa2)

    h_ne2 = abs(ch.h_ne) ** 2
    g_ne2 = abs(ch.g_ne) ** 2
    gamma_e1 = rho0 * b_ae * h_ne2 / (rho0 * b_be * g_ne2 + 1.0) \
        + rho0 * b_re * b_ar * ch.norm_h2 * ch.heu2 \
        / (rho0 * b_re * b_br * ch.norm_g2 * ch.heu2 + b_re * ch.heu2 + inv_kappa2)
    gamma_e2 = rho0 * b_be * g_ne2 \
        + rho0 * b_re * b_br * ch.norm_g2 * ch.heu2 / (b_re * ch.heu2 + inv_kappa2)

    return TrialOutcome.from_sinrs(
        Scheme.HD_RELAY, pair, gamma_a, gamma_b, gamma_e1, gamma_e2, params.log_base, prelog=HD_PRELOG
    )

"""
IRS phase design and effective channels for the IRS secrecy simulator.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from simulator.channels.fading import ChannelRealization
from simulator.errors import DimensionError, DomainError, PairIndexError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EveEffective:
    """
    Effective A-to-Eve (phi) and B-to-Eve (psi) channels under the scheduled
    phase configuration, with their Gaussian-approximation variances.
    """
    phi: complex
    psi: complex
    var_phi: float
    var_psi: float

    def __post_init__(self):
        """Validate the variances."""
        if not self.var_phi > 0.0 or not self.var_psi > 0.0:
            raise DomainError("Effective Eve channel variances must be positive")


def cascaded_zetas(h: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Coherent cascaded gain (sum_k |h_k||g_k|)^2 along the last axis."""
    return np.sum(np.abs(h) * np.abs(g), axis=-1) ** 2


def optimal_phases_and_zeta(h: np.ndarray, g: np.ndarray) -> Tuple[np.ndarray, float]:
    """
    Phase shifts that co-phase the cascaded A-IRS-B channel.

    Args:
        h: A-side channel vector of length K
        g: B-side channel vector of length K

    Returns:
        Tuple of (phases in [0, 2*pi), zeta = |sum_k h_k e^{j theta_k} g_k|^2)
    """
    h = np.asarray(h, dtype=complex)
    g = np.asarray(g, dtype=complex)
    if h.shape != g.shape:
        raise DimensionError(f"Channel vectors differ in length: {h.shape} vs {g.shape}")
    phases = np.mod(-(np.angle(h) + np.angle(g)), 2.0 * np.pi)
    zeta = float(np.abs(np.sum(h * np.exp(1j * phases) * g)) ** 2)
    return phases, zeta


def eve_effective(realization: ChannelRealization, phases: np.ndarray, pathloss, pair: int) -> EveEffective:
    """
    Effective channels from both users of a pair to Eve.

    Args:
        realization: Fading draw
        phases: IRS phases designed for this pair
        pathloss: PathlossSet
        pair: Pair index

    Returns:
        EveEffective
    """
    if not 0 <= int(pair) < realization.n_pairs:
        raise PairIndexError(f"Pair index {pair} out of range for {realization.n_pairs} pairs")
    n = int(pair)
    n_elements = realization.n_elements
    reflect = np.exp(1j * np.asarray(phases, dtype=float))
    if reflect.shape != (n_elements,):
        raise DimensionError(f"Expected {n_elements} phases, got {reflect.shape}")

    beta_irs_ae = float(pathloss.beta_irs_ae[n])
    beta_irs_be = float(pathloss.beta_irs_be[n])
    beta_dir_ae = float(pathloss.beta_dir_ae[n])
    beta_dir_be = float(pathloss.beta_dir_be[n])

    phi = np.sqrt(beta_irs_ae) * np.sum(realization.h_e * reflect * realization.h[n]) \
        + np.sqrt(beta_dir_ae) * realization.h_ne[n]
    psi = np.sqrt(beta_irs_be) * np.sum(realization.h_e * reflect * realization.g[n]) \
        + np.sqrt(beta_dir_be) * realization.g_ne[n]
    return EveEffective(
        phi=complex(phi),
        psi=complex(psi),
        var_phi=beta_irs_ae * n_elements + beta_dir_ae,
        var_psi=beta_irs_be * n_elements + beta_dir_be,
    )

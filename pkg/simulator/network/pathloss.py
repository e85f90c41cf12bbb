"""
Pathloss coefficients for the IRS secrecy simulator.
Derives every large-scale fading coefficient from the geometry and gains.
"""

import logging
from dataclasses import dataclass

import numpy as np

from simulator.errors import ContractError, DegenerateGeometryError, PairIndexError
from simulator.network.geometry import NetworkGeometry

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PathlossSet:
    """
    Per-pair pathloss coefficients (arrays of length N) plus the relay-Eve link.

    IRS-path coefficients carry the element area squared; direct and relay
    links are plain antenna-gain over distance power laws. The relay sits at
    the IRS position; its antenna gain defaults to the user gain.
    """
    beta_irs_ab: np.ndarray
    beta_irs_ba: np.ndarray
    beta_irs_aa: np.ndarray
    beta_irs_bb: np.ndarray
    beta_irs_ae: np.ndarray
    beta_irs_be: np.ndarray
    beta_dir_ae: np.ndarray
    beta_dir_be: np.ndarray
    beta_ar: np.ndarray
    beta_br: np.ndarray
    beta_dir_ae_relay: np.ndarray
    beta_dir_be_relay: np.ndarray
    beta_re: float

    def __post_init__(self):
        """Validate the coefficients after initialization."""
        for name, value in self.__dict__.items():
            if np.any(np.asarray(value) <= 0.0) or not np.all(np.isfinite(value)):
                raise DegenerateGeometryError(f"Pathloss coefficient {name} must be positive and finite")
        if not np.allclose(self.beta_irs_ab, self.beta_irs_ba, rtol=1e-12, atol=0.0):
            raise ContractError("IRS product pathloss must be reciprocal")

    @property
    def n_pairs(self) -> int:
        return int(np.size(self.beta_irs_ab))

    def check_pair(self, pair: int) -> int:
        """Return ``pair`` if it indexes an existing pair, else raise."""
        if not 0 <= int(pair) < self.n_pairs:
            raise PairIndexError(f"Pair index {pair} out of range for {self.n_pairs} pairs")
        return int(pair)


def make_pathloss(geom: NetworkGeometry, params) -> PathlossSet:
    """
    Compute every pathloss coefficient for a geometry.

    Args:
        geom: Network geometry
        params: SystemParams with gains, element area and pathloss exponent

    Returns:
        PathlossSet
    """
    alpha = params.pathloss_exp
    g_u = params.gain_user
    g_e = params.gain_eve
    g_r = params.gain_relay
    s2 = params.element_area_m2 ** 2

    d_a = np.asarray(geom.d_a, dtype=float)
    d_b = np.asarray(geom.d_b, dtype=float)
    d_e = float(geom.d_e)
    d_ae = np.asarray(geom.d_ae, dtype=float)
    d_be = np.asarray(geom.d_be, dtype=float)
    if np.any(d_a <= 0) or np.any(d_b <= 0) or d_e <= 0 or np.any(d_ae <= 0) or np.any(d_be <= 0):
        raise DegenerateGeometryError("All node distances must be strictly positive")

    beta_irs_ab = g_u * g_u * s2 / (d_a ** alpha * d_b ** alpha)
    beta_dir_ae = g_u * g_e / d_ae ** alpha
    beta_dir_be = g_u * g_e / d_be ** alpha
    return PathlossSet(
        beta_irs_ab=beta_irs_ab,
        beta_irs_ba=beta_irs_ab.copy(),
        beta_irs_aa=g_u * g_u * s2 / d_a ** (2 * alpha),
        beta_irs_bb=g_u * g_u * s2 / d_b ** (2 * alpha),
        beta_irs_ae=g_u * g_e * s2 / (d_e ** alpha * d_a ** alpha),
        beta_irs_be=g_u * g_e * s2 / (d_e ** alpha * d_b ** alpha),
        beta_dir_ae=beta_dir_ae,
        beta_dir_be=beta_dir_be,
        beta_ar=g_u * g_r / d_a ** alpha,
        beta_br=g_u * g_r / d_b ** alpha,
        beta_dir_ae_relay=beta_dir_ae.copy(),
        beta_dir_be_relay=beta_dir_be.copy(),
        beta_re=g_r * g_e / d_e ** alpha,
    )

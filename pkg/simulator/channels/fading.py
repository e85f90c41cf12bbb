"""
Rayleigh fading draws for the IRS secrecy simulator.
One ChannelRealization holds every small-scale coefficient of a trial.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from simulator.errors import ContractError, DimensionError

# Configure logging
logger = logging.getLogger(__name__)


def complex_gaussian(rng: np.random.Generator, shape: Union[int, Tuple[int, ...]], variance: float = 1.0) -> np.ndarray:
    """
    Draw circularly symmetric complex Gaussian samples CN(0, variance).

    Args:
        rng: Random stream
        shape: Output shape
        variance: Total variance E|x|^2

    Returns:
        Complex array
    """
    scale = np.sqrt(variance / 2.0)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


@dataclass(frozen=True, eq=False)
class ChannelRealization:
    """
    Small-scale fading for all N pairs in one trial.

    h and g have shape (N, K); h_ne and g_ne shape (N,); h_e shape (K,).
    rli_a and rli_b are present only in sampled RLI mode.
    """
    h: np.ndarray
    g: np.ndarray
    h_e: np.ndarray
    h_ne: np.ndarray
    g_ne: np.ndarray
    rli_a: Optional[np.ndarray] = None
    rli_b: Optional[np.ndarray] = None

    def __post_init__(self):
        """Validate array shapes."""
        if self.h.ndim != 2 or self.h.shape != self.g.shape:
            raise DimensionError(f"h and g must share shape (N, K), got {self.h.shape} and {self.g.shape}")
        n_pairs, n_elements = self.h.shape
        if self.h_e.shape != (n_elements,):
            raise DimensionError(f"h_e must have length {n_elements}, got {self.h_e.shape}")
        if self.h_ne.shape != (n_pairs,) or self.g_ne.shape != (n_pairs,):
            raise DimensionError("Direct Eve channels must have one entry per pair")
        if (self.rli_a is None) != (self.rli_b is None):
            raise ContractError("rli_a and rli_b must be both present or both absent")

    @property
    def n_pairs(self) -> int:
        return int(self.h.shape[0])

    @property
    def n_elements(self) -> int:
        return int(self.h.shape[1])


def sample_realization(
    rng: np.random.Generator,
    K: int,
    N: int,
    rli_mode: str = "deterministic",
    rli_variance: float = 0.0,
) -> ChannelRealization:
    """
    Draw one realization of every fading coefficient.

    Args:
        rng: Random stream
        K: Number of IRS elements (relay antennas)
        N: Number of user pairs
        rli_mode: "deterministic" or "sampled"
        rli_variance: Residual loop-interference variance in watts

    Returns:
        ChannelRealization
    """
    if K < 1 or N < 1:
        raise DimensionError(f"K and N must be positive, got K={K}, N={N}")

    h = complex_gaussian(rng, (N, K))
    g = complex_gaussian(rng, (N, K))
    h_e = complex_gaussian(rng, K)
    h_ne = complex_gaussian(rng, N)
    g_ne = complex_gaussian(rng, N)

    rli_a = rli_b = None
    if str(getattr(rli_mode, "value", rli_mode)) == "sampled":
        rli_a = complex_gaussian(rng, N, rli_variance)
        rli_b = complex_gaussian(rng, N, rli_variance)

    return ChannelRealization(h=h, g=g, h_e=h_e, h_ne=h_ne, g_ne=g_ne, rli_a=rli_a, rli_b=rli_b)

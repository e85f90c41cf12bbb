"""
Gamma approximation of the coherent cascaded gain.
sqrt(zeta) is a sum of K products of Rayleigh magnitudes, matched to Gamma(K mu, nu).
"""

import math
from dataclasses import dataclass

import numpy as np

from analysis.specfun.gamma import reg_lower_gamma
from simulator.errors import DomainError

MU = math.pi ** 2 / (16.0 - math.pi ** 2)
NU = (16.0 - math.pi ** 2) / (4.0 * math.pi)


@dataclass(frozen=True)
class Lemma1Params:
    mu: float
    nu: float
    shape: float


def lemma1_params(K: int) -> Lemma1Params:
    if K < 1:
        raise DomainError(f"Number of elements must be positive, got {K}")
    return Lemma1Params(mu=MU, nu=NU, shape=K * MU)


def lemma1_cdf(x, K: int):
    """
    Approximate CDF of zeta = (sum_k |h_k||g_k|)^2.

    Args:
        x: Non-negative value or array of values
        K: Number of elements

    Returns:
        P(K mu, sqrt(x) / nu), with the shape of ``x``
    """
    shape = lemma1_params(K).shape
    if np.ndim(x) == 0:
        if x < 0:
            raise DomainError(f"CDF argument must be non-negative, got {x}")
        return reg_lower_gamma(shape, math.sqrt(x) / NU)
    values = np.asarray(x, dtype=float)
    if np.any(values < 0):
        raise DomainError("CDF arguments must be non-negative")
    flat = [reg_lower_gamma(shape, math.sqrt(v) / NU) for v in values.ravel()]
    return np.asarray(flat, dtype=float).reshape(values.shape)


def scheduled_cdf(x, K: int, N: int):
    """CDF of the largest of N independent cascaded gains."""
    if N < 1:
        raise DomainError(f"Number of pairs must be positive, got {N}")
    return lemma1_cdf(x, K) ** N


def sample_scheduled_zeta(rng: np.random.Generator, K: int, N: int, size: int) -> np.ndarray:
    """
    Draw the scheduled cascaded gain from its Gamma approximation.

    Args:
        rng: Random stream
        K: Number of elements
        N: Number of pairs
        size: Number of draws

    Returns:
        Array of ``size`` draws of max_n zeta_n
    """
    shape = lemma1_params(K).shape
    roots = rng.gamma(shape, NU, size=(size, N)).max(axis=1)
    return roots ** 2

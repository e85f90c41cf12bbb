"""
Empirical distributions and Kolmogorov-Smirnov distances.
"""

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

import numpy as np

from simulator.errors import ContractError

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True, eq=False)
class EmpiricalCdf:
    """Right-continuous step CDF of a sample."""
    sorted_samples: np.ndarray

    @property
    def size(self) -> int:
        return int(self.sorted_samples.size)

    def __call__(self, x: ArrayLike) -> ArrayLike:
        counts = np.searchsorted(self.sorted_samples, x, side="right")
        return counts / self.size

    def left_limit(self, x: ArrayLike) -> ArrayLike:
        """F(x-), the mass strictly below x."""
        counts = np.searchsorted(self.sorted_samples, x, side="left")
        return counts / self.size


def empirical_cdf(samples: Iterable[float]) -> EmpiricalCdf:
    """
    Build the empirical CDF of ``samples``.

    Args:
        samples: Non-empty sample

    Returns:
        EmpiricalCdf
    """
    if isinstance(samples, np.ndarray):
        values = np.sort(samples.astype(float).ravel())
    else:
        values = np.sort(np.fromiter(samples, dtype=float))
    if values.size == 0:
        raise ContractError("empirical_cdf needs at least one sample")
    if not np.all(np.isfinite(values)):
        raise ContractError("empirical_cdf samples must be finite")
    return EmpiricalCdf(sorted_samples=values)


def ks_distance(
    empirical: EmpiricalCdf,
    analytic: Callable[[ArrayLike], ArrayLike],
    eval_points: Optional[Iterable[float]] = None,
) -> float:
    """
    Sup distance between an empirical CDF and a reference CDF.

    Both F(x) and F(x-) are compared at every point; a reference that is
    itself a step function is compared through its own left limit.

    Args:
        empirical: Empirical CDF
        analytic: Reference CDF, vectorized over numpy arrays
        eval_points: Points to check (defaults to the sample points)

    Returns:
        KS distance in [0, 1]
    """
    points = empirical.sorted_samples if eval_points is None else np.asarray(list(eval_points), dtype=float)
    if points.size == 0:
        return 0.0
    reference = np.asarray(analytic(points), dtype=float)
    reference_left = np.asarray(getattr(analytic, "left_limit", analytic)(points), dtype=float)
    right_gap = np.abs(empirical(points) - reference)
    left_gap = np.abs(empirical.left_limit(points) - reference_left)
    return float(max(right_gap.max(), left_gap.max()))

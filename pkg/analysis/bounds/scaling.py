"""
Reference curves for the high-SNR, many-element and many-pair scaling laws.
"""

from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np

from simulator.errors import DomainError


class ScalingKind(str, Enum):
    POWER = "power"
    ELEMENTS = "elements"
    PAIRS = "pairs"


def _phi(kind: ScalingKind, values: np.ndarray) -> np.ndarray:
    if kind == ScalingKind.POWER:
        return np.log(values)
    if kind == ScalingKind.ELEMENTS:
        return 2.0 * np.log(values)
    return np.log(np.log(values))


def scaling_reference(
    kind,
    grid: Sequence[float],
    anchor: Tuple[float, float],
    signals: int = 2,
) -> List[float]:
    """
    Reference curve y0 + s * (phi(x) - phi(x0)) through an anchor point.

    phi is ln for power (linear units), 2 ln for elements and ln ln for pairs;
    s is the number of signals summed.

    Args:
        kind: "power", "elements" or "pairs"
        grid: Positive, increasing abscissae
        anchor: (x0, y0) point the curve passes through
        signals: Number of signals summed

    Returns:
        Reference values in nats, one per grid point
    """
    kind = ScalingKind(kind)
    values = np.asarray(grid, dtype=float)
    x0, y0 = anchor
    if values.size == 0 or np.any(values <= 0.0) or np.any(np.diff(values) <= 0.0):
        raise DomainError("Scaling grid must be positive and strictly increasing")
    if kind == ScalingKind.PAIRS and (np.any(values <= 1.0) or x0 <= 1.0):
        raise DomainError("Pair scaling needs grid values above 1")
    offset = _phi(kind, np.asarray([x0], dtype=float))[0]
    return list(y0 + signals * (_phi(kind, values) - offset))

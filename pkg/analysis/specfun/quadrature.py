"""
Gauss-Chebyshev quadrature on the half-line.
Maps [0, inf) onto [0, pi/2) with x = tan y before applying the rule.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Tuple

from cachetools import LRUCache, cached

from simulator.errors import DomainError, QuadratureEvaluationError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadratureRule:
    """
    Nodes and weights of an order-M Gauss-Chebyshev rule.

    ``nodes`` are the Chebyshev abscissae theta_m, ``mapped_nodes`` the
    corresponding points x_m = (pi/4)(theta_m + 1) on (0, pi/2), and
    ``weights`` the factors sqrt(1 - theta_m^2).
    """
    order: int
    nodes: Tuple[float, ...]
    mapped_nodes: Tuple[float, ...]
    weights: Tuple[float, ...]

    def __post_init__(self):
        """Validate the rule after initialization."""
        if self.order < 1:
            raise DomainError(f"Quadrature order must be positive, got {self.order}")
        if not (len(self.nodes) == len(self.mapped_nodes) == len(self.weights) == self.order):
            raise DomainError("Quadrature node and weight lists must have length equal to the order")


def gc_rule(order: int) -> QuadratureRule:
    """
    Build the Gauss-Chebyshev rule of the given order.

    Args:
        order: Number of nodes M (>= 1)

    Returns:
        QuadratureRule
    """
    # Checked before the cache lookup: True and 1 share a cache key
    if isinstance(order, bool) or int(order) != order or order < 1:
        raise DomainError(f"Quadrature order must be a positive integer, got {order}")
    return _build_rule(int(order))


@cached(cache=LRUCache(maxsize=64))
def _build_rule(order: int) -> QuadratureRule:
    nodes = tuple(math.cos((2 * m - 1) * math.pi / (2 * order)) for m in range(1, order + 1))
    mapped = tuple(math.pi / 4.0 * (theta + 1.0) for theta in nodes)
    weights = tuple(math.sqrt(max(0.0, 1.0 - theta * theta)) for theta in nodes)
    return QuadratureRule(order=order, nodes=nodes, mapped_nodes=mapped, weights=weights)


def gc_integrate_halfline(f: Callable[[float], float], rule: QuadratureRule) -> float:
    """
    Integrate f over [0, inf) with the tan-mapped Gauss-Chebyshev rule.

    Computes (pi^2 / (4M)) * sum_m w_m sec^2(x_m) f(tan x_m).

    Args:
        f: Integrand on the half-line
        rule: Quadrature rule

    Returns:
        Approximation of the integral
    """
    total = 0.0
    for index, (x_m, weight) in enumerate(zip(rule.mapped_nodes, rule.weights)):
        value = f(math.tan(x_m))
        if not math.isfinite(value):
            raise QuadratureEvaluationError(index, value)
        cos_x = math.cos(x_m)
        total += weight * value / (cos_x * cos_x)
    return math.pi ** 2 / (4.0 * rule.order) * total

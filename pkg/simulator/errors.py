"""
Exceptions for the IRS secrecy simulator.
Each class also derives from the matching builtin so callers may catch either.
"""

from typing import Optional


class SecrecySimError(Exception):
    """Base class for all simulator and analysis errors."""


class DomainError(SecrecySimError, ValueError):
    """Argument outside the mathematical domain of a function."""


class QuadratureEvaluationError(SecrecySimError, ArithmeticError):
    """Integrand returned a non-finite value at a quadrature node."""

    def __init__(self, node_index: int, value: float):
        self.node_index = node_index
        self.value = value
        super().__init__(f"Integrand is not finite at node {node_index}: {value}")


class DegenerateGeometryError(SecrecySimError, ValueError):
    """Zero distance or zero-norm channel vector."""


class DimensionError(SecrecySimError, ValueError):
    """Vectors of mismatched length."""


class ContractError(SecrecySimError, ValueError):
    """Caller violated an operation precondition."""


class PairIndexError(SecrecySimError, IndexError):
    """User pair index out of range."""


class ConfigError(SecrecySimError, ValueError):
    """Invalid configuration key or value."""

    def __init__(self, message: str, key: Optional[str] = None, line: Optional[int] = None):
        self.key = key
        self.line = line
        location = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{location}")

"""
Fading generation, IRS phase design and effective eavesdropper channels.
"""

from simulator.channels.fading import ChannelRealization, complex_gaussian, sample_realization
from simulator.channels.reflection import (
    EveEffective,
    cascaded_zetas,
    eve_effective,
    optimal_phases_and_zeta,
)

__all__ = [
    "ChannelRealization",
    "complex_gaussian",
    "sample_realization",
    "EveEffective",
    "cascaded_zetas",
    "eve_effective",
    "optimal_phases_and_zeta",
]

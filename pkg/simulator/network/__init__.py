"""
Network model: unit conversions, node geometry and pathloss coefficients.
"""

from simulator.network.units import dbi_to_linear, dbm_to_watt
from simulator.network.geometry import NetworkGeometry, fixed_geometry, sample_user_positions
from simulator.network.pathloss import PathlossSet, make_pathloss

__all__ = [
    "dbi_to_linear",
    "dbm_to_watt",
    "NetworkGeometry",
    "fixed_geometry",
    "sample_user_positions",
    "PathlossSet",
    "make_pathloss",
]

"""
Unit conversions used by the link model.
"""


def dbm_to_watt(value_dbm: float) -> float:
    """Convert a power level in dBm to watts."""
    return 10.0 ** ((value_dbm - 30.0) / 10.0)


def dbi_to_linear(gain_dbi: float) -> float:
    """Convert an antenna gain in dBi to a linear factor."""
    return 10.0 ** (gain_dbi / 10.0)

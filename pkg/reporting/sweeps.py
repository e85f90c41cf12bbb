"""
Parameter sweeps over transmit power, element count or pair count.
Each grid point runs a campaign and optionally the analytic bounds.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from analysis.bounds.scaling import ScalingKind, scaling_reference
from analysis.bounds.theorem import bound_breakdown
from simulator.errors import ContractError
from simulator.montecarlo.engine import Quantity, run_campaign
from simulator.network.geometry import fixed_geometry
from simulator.network.units import dbm_to_watt
from simulator.schemes.base import log_scale
from simulator.settings.system_config import CampaignConfig, Scheme

# Configure logging
logger = logging.getLogger(__name__)


class SweepAxis(str, Enum):
    POWER_DBM = "power_dbm"
    ELEMENTS = "elements"
    PAIRS = "pairs"


_SCALING_KIND = {
    SweepAxis.POWER_DBM: ScalingKind.POWER,
    SweepAxis.ELEMENTS: ScalingKind.ELEMENTS,
    SweepAxis.PAIRS: ScalingKind.PAIRS,
}


def axis_column(axis: SweepAxis) -> str:
    """Header of the abscissa column, unit included."""
    return "axis_value_dbm" if SweepAxis(axis) == SweepAxis.POWER_DBM else "axis_value_count"


def rate_columns(unit: str, include_analytic: bool, include_reference: bool) -> List[str]:
    """Value columns of a sweep table; a function of the flags only."""
    columns = [f"rate_s1_{unit}", f"rate_s2_{unit}", f"sum_{unit}", f"ci95_{unit}"]
    if include_analytic:
        columns += [f"analytic_bound_s1_{unit}", f"analytic_bound_s2_{unit}"]
    if include_reference:
        columns.append(f"reference_{unit}")
    return columns


@dataclass(frozen=True)
class SweepSpec:
    """One swept axis, its grid and the campaign every point starts from."""
    axis: SweepAxis
    values: Tuple[float, ...]
    base: CampaignConfig
    include_analytic: bool = True
    include_reference_slopes: bool = True
    reference_anchor: Optional[float] = None

    def __post_init__(self):
        """Validate the grid."""
        object.__setattr__(self, "axis", SweepAxis(self.axis))
        values = tuple(self.values)
        if not values:
            raise ContractError("Sweep needs at least one grid value")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ContractError(f"Sweep values must be strictly increasing, got {list(values)}")
        if self.axis != SweepAxis.POWER_DBM:
            if any(v != int(v) or v < 1 for v in values):
                raise ContractError(f"{self.axis.value} values must be positive integers")
            values = tuple(int(v) for v in values)
        object.__setattr__(self, "values", values)

    def point_config(self, value) -> CampaignConfig:
        return self.base.with_params(**{self.axis.value: value})

    @property
    def anchor(self):
        """Grid value the scaling reference passes through."""
        for value in self.values:
            if self.reference_anchor is not None and value == self.reference_anchor:
                return value
        return self.values[0]


def _point_rows(spec: SweepSpec, value, unit: str, scale: float) -> List[Dict]:
    config = spec.point_config(value)
    estimates = run_campaign(config)
    by_scheme: Dict[Scheme, Dict[Quantity, object]] = {}
    for estimate in estimates:
        by_scheme.setdefault(estimate.scheme, {})[estimate.quantity] = estimate

    bounds = (math.nan, math.nan)
    if spec.include_analytic and Scheme.PROPOSED in by_scheme:
        geometry = fixed_geometry(config.params.pairs, config.deployment)
        breakdown = bound_breakdown(config.params, geometry)
        bounds = (breakdown.r_s1 / scale, breakdown.r_s2 / scale)

    rows = []
    for scheme, quantities in by_scheme.items():
        row = {
            axis_column(spec.axis): value,
            "scheme": scheme.value,
            f"rate_s1_{unit}": quantities[Quantity.RATE_S1].mean,
            f"rate_s2_{unit}": quantities[Quantity.RATE_S2].mean,
            f"sum_{unit}": quantities[Quantity.SUM].mean,
            f"ci95_{unit}": quantities[Quantity.SUM].ci95_halfwidth,
        }
        if spec.include_analytic:
            is_proposed = scheme == Scheme.PROPOSED
            row[f"analytic_bound_s1_{unit}"] = bounds[0] if is_proposed else math.nan
            row[f"analytic_bound_s2_{unit}"] = bounds[1] if is_proposed else math.nan
        rows.append(row)
    return rows


def _reference_column(spec: SweepSpec, frame: pd.DataFrame, unit: str, scale: float) -> pd.Series:
    x_column = axis_column(spec.axis)
    anchor_scheme = Scheme.PROPOSED.value if Scheme.PROPOSED in spec.base.schemes else frame["scheme"].iloc[0]
    curve = frame[frame["scheme"] == anchor_scheme].set_index(x_column)[f"sum_{unit}"]
    x0 = spec.anchor
    grid = np.asarray(spec.values, dtype=float)
    if spec.axis == SweepAxis.POWER_DBM:
        grid_lin = np.asarray([dbm_to_watt(v) for v in grid])
        x0_lin = dbm_to_watt(x0)
    else:
        grid_lin, x0_lin = grid, float(x0)
    reference = scaling_reference(_SCALING_KIND[spec.axis], grid_lin, (x0_lin, float(curve[x0]) * scale))
    lookup = {value: ref / scale for value, ref in zip(spec.values, reference)}
    return frame[x_column].map(lookup)


def run_sweep(spec: SweepSpec) -> pd.DataFrame:
    """
    Run a campaign at every grid point and tabulate the ASR estimates.

    Args:
        spec: Sweep definition

    Returns:
        One row per (grid value, scheme), units in the column names
    """
    log_base = spec.base.params.log_base
    unit = log_base.value
    scale = log_scale(log_base)
    logger.info(f"Sweeping {spec.axis.value} over {list(spec.values)}")

    rows = []
    for value in spec.values:
        logger.info(f"Sweep point {spec.axis.value}={value}")
        rows.extend(_point_rows(spec, value, unit, scale))

    frame = pd.DataFrame(rows)
    if spec.include_reference_slopes:
        frame[f"reference_{unit}"] = _reference_column(spec, frame, unit, scale)
    columns = [axis_column(spec.axis), "scheme"] + rate_columns(
        unit, spec.include_analytic, spec.include_reference_slopes
    )
    return frame[columns]

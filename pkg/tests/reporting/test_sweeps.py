"""
Tests for parameter sweeps.
"""

import math

import pytest

from reporting.sweeps import SweepAxis, SweepSpec, axis_column, rate_columns, run_sweep
from reporting.writers import frame_to_csv
from simulator.errors import ContractError
from simulator.settings.system_config import CampaignConfig, Scheme


@pytest.fixture
def base():
    return CampaignConfig(trials=30, seed=11, schemes="proposed,oneway_jam")


def test_axis_columns_carry_units():
    assert axis_column(SweepAxis.POWER_DBM) == "axis_value_dbm"
    assert axis_column(SweepAxis.ELEMENTS) == "axis_value_count"
    assert rate_columns("bits", False, False) == ["rate_s1_bits", "rate_s2_bits", "sum_bits", "ci95_bits"]
    assert rate_columns("nats", True, True)[-1] == "reference_nats"


@pytest.mark.parametrize("values", [(), (10.0, 10.0), (20.0, 10.0)])
def test_grid_must_be_strictly_increasing(base, values):
    with pytest.raises(ContractError):
        SweepSpec(SweepAxis.POWER_DBM, values, base)


def test_count_axes_need_positive_integers(base):
    with pytest.raises(ContractError):
        SweepSpec(SweepAxis.ELEMENTS, (16, 32.5), base)
    with pytest.raises(ContractError):
        SweepSpec(SweepAxis.PAIRS, (0, 2), base)
    spec = SweepSpec(SweepAxis.PAIRS, (2.0, 4.0), base)
    assert spec.values == (2, 4)
    assert spec.point_config(4).params.pairs == 4


def test_anchor_falls_back_to_first_value(base):
    assert SweepSpec(SweepAxis.ELEMENTS, (16, 32, 64), base, reference_anchor=32).anchor == 32
    assert SweepSpec(SweepAxis.ELEMENTS, (16, 32, 64), base, reference_anchor=48).anchor == 16


def test_power_sweep_table(base):
    spec = SweepSpec(SweepAxis.POWER_DBM, (10.0, 20.0), base)
    frame = run_sweep(spec)
    unit = base.params.log_base.value
    assert list(frame.columns) == ["axis_value_dbm", "scheme"] + rate_columns(unit, True, True)
    assert len(frame) == 4

    proposed = frame[frame["scheme"] == Scheme.PROPOSED.value]
    oneway = frame[frame["scheme"] == Scheme.ONEWAY_JAM.value]
    assert proposed[f"analytic_bound_s1_{unit}"].notna().all()
    assert oneway[f"analytic_bound_s1_{unit}"].isna().all()

    anchor_row = proposed[proposed["axis_value_dbm"] == 10.0].iloc[0]
    assert anchor_row[f"reference_{unit}"] == pytest.approx(anchor_row[f"sum_{unit}"])
    higher = proposed[proposed["axis_value_dbm"] == 20.0].iloc[0]
    # Reference grows by 2 ln(10) nats per decade of power
    assert higher[f"reference_{unit}"] - anchor_row[f"reference_{unit}"] == pytest.approx(2.0 * math.log(10.0))


def test_optional_columns_dropped(base):
    spec = SweepSpec(SweepAxis.PAIRS, (2, 4), base, include_analytic=False, include_reference_slopes=False)
    frame = run_sweep(spec)
    assert list(frame.columns) == ["axis_value_count", "scheme"] + rate_columns("nats", False, False)


def test_sweep_csv_is_reproducible(base):
    spec = SweepSpec(SweepAxis.ELEMENTS, (8, 16), base)
    assert frame_to_csv(run_sweep(spec)) == frame_to_csv(run_sweep(spec))

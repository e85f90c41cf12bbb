"""
Tests for the figure presets.
"""

import pandas as pd
import pytest

from reporting import figures
from reporting.figures import PRESETS, FigureName, preset_spec, run_figure_preset
from reporting.sweeps import SweepAxis, axis_column, rate_columns
from simulator.settings.system_config import CampaignConfig


def _fake_sweep(spec):
    unit = spec.base.params.log_base.value
    columns = rate_columns(unit, spec.include_analytic, spec.include_reference_slopes)
    rows = []
    for value in spec.values:
        row = {axis_column(spec.axis): value, "scheme": "proposed"}
        row.update({column: 1.0 for column in columns})
        rows.append(row)
    return pd.DataFrame(rows)


def test_presets_pin_the_other_parameters():
    spec = preset_spec(PRESETS[FigureName.FIG2], CampaignConfig())
    assert spec.axis == SweepAxis.ELEMENTS
    assert spec.values == (16, 32, 64, 128, 256)
    assert spec.base.params.power_dbm == 20.0
    assert spec.base.params.pairs == 6
    assert spec.anchor == 64
    assert preset_spec(PRESETS[FigureName.FIG1], CampaignConfig()).base.params.elements == 32
    assert preset_spec(PRESETS[FigureName.FIG3], CampaignConfig()).base.params.power_dbm == 30.0


def test_single_preset_writes_csv(mocker, tmp_path):
    sweep = mocker.patch.object(figures, "run_sweep", side_effect=_fake_sweep)
    written = run_figure_preset("fig1", tmp_path)
    assert written == [tmp_path / "fig1.csv"]
    assert sweep.call_count == 1
    assert sweep.call_args.args[0].axis == SweepAxis.POWER_DBM


def test_all_presets_with_charts(mocker, tmp_path):
    mocker.patch.object(figures, "run_sweep", side_effect=_fake_sweep)
    written = run_figure_preset(FigureName.ALL, tmp_path, svg=True)
    assert sorted(path.name for path in written) == [
        "fig1.csv", "fig1.svg", "fig2.csv", "fig2.svg", "fig3.csv", "fig3.svg",
    ]
    assert all(path.exists() for path in written)


def test_unknown_preset_rejected(tmp_path):
    with pytest.raises(ValueError):
        run_figure_preset("fig9", tmp_path)

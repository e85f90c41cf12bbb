"""
Tests for the CSV and SVG writers.
"""

import pandas as pd

from reporting.writers import frame_to_csv, write_csv, write_svg_chart


def _frame():
    return pd.DataFrame(
        {
            "axis_value_dbm": [10.0, 20.0, 10.0, 20.0],
            "scheme": ["proposed", "proposed", "oneway_jam", "oneway_jam"],
            "sum_nats": [1.0 / 3.0, 2.123456789123, 0.5, 0.75],
            "bound": [0.3, 2.0, float("nan"), float("nan")],
        }
    )


def test_csv_uses_lf_and_nine_significant_digits():
    text = frame_to_csv(_frame())
    assert "\r" not in text
    lines = text.split("\n")
    assert lines[0] == "axis_value_dbm,scheme,sum_nats,bound"
    assert lines[1] == "10,proposed,0.333333333,0.3"
    assert "2.12345679" in lines[2]
    assert text.endswith("\n")


def test_write_csv_creates_directories(tmp_path):
    path = write_csv(_frame(), tmp_path / "nested" / "out.csv")
    assert path.read_text(encoding="utf-8") == frame_to_csv(_frame())


def test_svg_chart_is_deterministic(tmp_path):
    first = write_svg_chart(_frame(), tmp_path / "a.svg", "axis_value_dbm", "sum_nats", bound_column="bound")
    second = write_svg_chart(_frame(), tmp_path / "b.svg", "axis_value_dbm", "sum_nats", bound_column="bound")
    assert first.read_bytes() == second.read_bytes()
    assert b"<svg" in first.read_bytes()

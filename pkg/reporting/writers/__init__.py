"""
CSV and SVG emitters for sweep and campaign results.
"""

from reporting.writers.csv_writer import frame_to_csv, write_csv
from reporting.writers.svg_chart import write_svg_chart

__all__ = ["frame_to_csv", "write_csv", "write_svg_chart"]

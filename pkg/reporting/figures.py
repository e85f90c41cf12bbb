"""
Figure-reproduction presets.
Each preset is a sweep over one axis with the other system parameters pinned.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from reporting.sweeps import SweepAxis, SweepSpec, axis_column, run_sweep
from reporting.writers.csv_writer import write_csv
from reporting.writers.svg_chart import write_svg_chart
from simulator.settings.system_config import CampaignConfig

# Configure logging
logger = logging.getLogger(__name__)


class FigureName(str, Enum):
    FIG1 = "fig1"
    FIG2 = "fig2"
    FIG3 = "fig3"
    ALL = "all"


@dataclass(frozen=True)
class FigurePreset:
    name: str
    axis: SweepAxis
    values: Tuple[float, ...]
    pinned: Dict[str, Any] = field(default_factory=dict)
    reference_anchor: Optional[float] = None
    title: str = ""
    x_label: str = ""


PRESETS: Dict[FigureName, FigurePreset] = {
    FigureName.FIG1: FigurePreset(
        name="fig1",
        axis=SweepAxis.POWER_DBM,
        values=(10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0),
        pinned={"elements": 32, "pairs": 10},
        title="Sum ASR versus transmit power (K=32, N=10)",
        x_label="P (dBm)",
    ),
    FigureName.FIG2: FigurePreset(
        name="fig2",
        axis=SweepAxis.ELEMENTS,
        values=(16, 32, 64, 128, 256),
        pinned={"power_dbm": 20.0, "pairs": 6},
        reference_anchor=64,
        title="Sum ASR versus number of IRS elements (P=20 dBm, N=6)",
        x_label="K",
    ),
    FigureName.FIG3: FigurePreset(
        name="fig3",
        axis=SweepAxis.PAIRS,
        values=(2, 4, 8, 16, 32, 64, 128),
        pinned={"power_dbm": 30.0, "elements": 32},
        title="Sum ASR versus number of user pairs (P=30 dBm, K=32)",
        x_label="N",
    ),
}


def preset_spec(preset: FigurePreset, base: CampaignConfig) -> SweepSpec:
    """Sweep definition of a preset on top of ``base``."""
    return SweepSpec(
        axis=preset.axis,
        values=preset.values,
        base=base.with_params(**preset.pinned),
        include_analytic=True,
        include_reference_slopes=True,
        reference_anchor=preset.reference_anchor,
    )


def run_figure_preset(
    name: Union[str, FigureName],
    out_dir: Union[str, Path],
    base: Optional[CampaignConfig] = None,
    svg: bool = False,
) -> List[Path]:
    """
    Run a figure preset and write its CSV (and SVG when asked).

    Args:
        name: fig1, fig2, fig3 or all
        out_dir: Output directory
        base: Campaign settings shared by every grid point
        svg: Also render a line chart

    Returns:
        Paths of the files written
    """
    name = FigureName(name)
    base = base or CampaignConfig()
    if name == FigureName.ALL:
        written = []
        for each in (FigureName.FIG1, FigureName.FIG2, FigureName.FIG3):
            written.extend(run_figure_preset(each, out_dir, base, svg))
        return written

    preset = PRESETS[name]
    logger.info(f"Running preset {preset.name}")
    frame = run_sweep(preset_spec(preset, base))
    out_dir = Path(out_dir)
    written = [write_csv(frame, out_dir / f"{preset.name}.csv")]
    if svg:
        unit = base.params.log_base.value
        chart = frame.assign(
            analytic_sum=frame[f"analytic_bound_s1_{unit}"] + frame[f"analytic_bound_s2_{unit}"]
        )
        written.append(
            write_svg_chart(
                chart,
                out_dir / f"{preset.name}.svg",
                x_column=axis_column(preset.axis),
                y_column=f"sum_{unit}",
                title=preset.title,
                x_label=preset.x_label,
                y_label=f"Sum ASR ({unit}/s/Hz)",
                bound_column="analytic_sum",
                reference_column=f"reference_{unit}",
            )
        )
    return written

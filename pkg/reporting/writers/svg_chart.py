"""
Line charts of sweep results, rendered to SVG with matplotlib.
"""

import logging
from pathlib import Path
from typing import Optional, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402

# Configure logging
logger = logging.getLogger(__name__)

# Stable element ids so repeated renders are identical
matplotlib.rcParams["svg.hashsalt"] = "irs-secrecy"


def write_svg_chart(
    frame: pd.DataFrame,
    path: Union[str, Path],
    x_column: str,
    y_column: str,
    title: str = "",
    x_label: Optional[str] = None,
    y_label: Optional[str] = None,
    bound_column: Optional[str] = None,
    reference_column: Optional[str] = None,
) -> Path:
    """
    Plot ``y_column`` against ``x_column``, one line per scheme.

    Args:
        frame: Sweep table with a ``scheme`` column
        path: Destination SVG file
        x_column: Abscissa column
        y_column: Ordinate column
        title: Chart title
        x_label: Abscissa label (defaults to the column name)
        y_label: Ordinate label (defaults to the column name)
        bound_column: Optional analytic column drawn dashed
        reference_column: Optional scaling reference drawn dotted

    Returns:
        The written path
    """
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    try:
        for scheme, group in frame.groupby("scheme", sort=False):
            ax.plot(group[x_column], group[y_column], marker="o", label=str(scheme))
            if bound_column and group[bound_column].notna().any():
                ax.plot(group[x_column], group[bound_column], linestyle="--", label=f"{scheme} (bound)")
        if reference_column:
            reference = frame.drop_duplicates(subset=[x_column])
            ax.plot(reference[x_column], reference[reference_column], linestyle=":", color="black", label="reference")
        ax.set_title(title)
        ax.set_xlabel(x_label or x_column)
        ax.set_ylabel(y_label or y_column)
        ax.grid(True, alpha=0.3)
        ax.legend()
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as e:
        raise OSError(f"Cannot write SVG to {path}: {e}") from e
    finally:
        plt.close(fig)
    logger.info(f"Wrote chart {path}")
    return path

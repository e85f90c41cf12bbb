"""
CSV emission with a fixed float format and LF line endings.
"""

import logging
from pathlib import Path
from typing import Union

import pandas as pd

# Configure logging
logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.9g"


def frame_to_csv(frame: pd.DataFrame) -> str:
    """Render a frame as UTF-8 CSV text with 9 significant digits."""
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def write_csv(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    """
    Write a frame to ``path``, creating parent directories.

    Args:
        frame: Table to write
        path: Destination file

    Returns:
        The written path
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(frame_to_csv(frame))
    except OSError as e:
        raise OSError(f"Cannot write CSV to {path}: {e}") from e
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path

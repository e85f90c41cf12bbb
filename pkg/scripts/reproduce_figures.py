#!/usr/bin/env python3
"""
Script to reproduce every figure preset.
Writes fig1/fig2/fig3 CSV and SVG files under the output directory.
"""

import argparse
import logging
import os
import sys

# Add parent directory to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from reporting.figures import run_figure_preset  # noqa: E402
from simulator.main import configure_logging  # noqa: E402
from simulator.settings.config_loader import load_config  # noqa: E402

logger = logging.getLogger(__name__)


def main():
    parser = argparse.ArgumentParser(description="Reproduce the sweep figures")
    parser.add_argument("--config", help="Path to a key = value configuration file")
    parser.add_argument("--out", default="results", help="Output directory")
    parser.add_argument("--trials", type=int, help="Trials per grid point")
    parser.add_argument("--workers", type=int, help="Worker processes")
    args = parser.parse_args()

    configure_logging()
    config = load_config(
        args.config,
        overrides={"trials": args.trials, "workers": args.workers},
        defaults={"log_base": "bits"},
    )
    written = run_figure_preset("all", args.out, config, svg=True)
    logger.info(f"Wrote {len(written)} files to {args.out}")


if __name__ == "__main__":
    main()

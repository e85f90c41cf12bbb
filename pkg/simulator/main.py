"""
Main entry point for the IRS secrecy simulator.
Command-line front end for analytic bounds, campaigns, sweeps, figures and validation.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd
from dotenv import load_dotenv

from analysis.bounds.theorem import bound_breakdown
from reporting.figures import FigureName, run_figure_preset
from reporting.sweeps import SweepAxis, SweepSpec, run_sweep
from reporting.validation import ValidationLevel, run_validation_suite
from reporting.writers.csv_writer import frame_to_csv, write_csv
from reporting.writers.svg_chart import write_svg_chart
from simulator.errors import ConfigError, SecrecySimError
from simulator.montecarlo.engine import run_campaign
from simulator.network.geometry import fixed_geometry
from simulator.schemes.base import log_scale
from simulator.settings.config_loader import load_config
from simulator.settings.system_config import CampaignConfig, GeometryMode, LogBase

# Configure logging
logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2


def configure_logging(level: str = "INFO") -> None:
    """
    Configure the root logger with console and file handlers.

    Args:
        level: Logging level name
    """
    log_dir = os.getenv("LOG_DIR", "logs")
    os.makedirs(log_dir, exist_ok=True)
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=[
            logging.StreamHandler(),
            logging.FileHandler(os.path.join(log_dir, "simulator.log")),
        ],
        force=True,
    )


def _parse_values(text: Optional[str]) -> Optional[List[float]]:
    if text is None:
        return None
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigError(f"Cannot parse value list {text!r}", key="values") from e


class SimulatorApp:
    """
    Application class behind the command-line subcommands.
    """

    def __init__(self, args: argparse.Namespace):
        """
        Initialize the application from parsed arguments.

        Args:
            args: Parsed command-line arguments
        """
        self.args = args
        self.config = self._load_config(args)
        self.out_dir = Path(args.out)

    def _load_config(self, args: argparse.Namespace) -> CampaignConfig:
        """
        Load configuration from defaults, environment, file and flags.

        Args:
            args: Parsed command-line arguments

        Returns:
            CampaignConfig
        """
        # Reports default to bits; internal math stays in nats
        defaults = {"log_base": LogBase.BITS.value}

        geometry = None
        if args.geometry is not None:
            geometry = GeometryMode.FIXED.value if args.geometry == "fixed" else GeometryMode.RANDOM_DISC.value

        overrides: Dict[str, Any] = {
            "seed": args.seed,
            "trials": args.trials,
            "workers": args.workers,
            "estimator": args.estimator,
            "geometry_mode": geometry,
            "log_base": LogBase.NATS.value if args.nats else None,
            "show_progress": False if args.no_progress else sys.stderr.isatty(),
        }
        return load_config(args.config, overrides=overrides, defaults=defaults)

    def _emit(self, frame: pd.DataFrame, filename: str) -> None:
        if self.args.stdout:
            sys.stdout.write(frame_to_csv(frame))
        else:
            write_csv(frame, self.out_dir / filename)

    def analytic(self) -> int:
        """Tabulate every bound term, optionally over a power grid."""
        unit = self.config.params.log_base.value
        scale = log_scale(self.config.params.log_base)
        powers = _parse_values(self.args.values) or [self.config.params.power_dbm]
        rows = []
        for power in powers:
            params = self.config.with_params(power_dbm=power).params
            breakdown = bound_breakdown(params, fixed_geometry(params.pairs, self.config.deployment))
            row = {"power_dbm": power}
            for name in ("q_m_s1", "q_m_s2", "q_e1", "j1", "j2", "r_s1", "r_s2"):
                row[f"{name}_{unit}"] = getattr(breakdown, name) / scale
            row[f"sum_{unit}"] = breakdown.sum_rate / scale
            rows.append(row)
        self._emit(pd.DataFrame(rows), "analytic.csv")
        return EXIT_OK

    def simulate(self) -> int:
        """Run one campaign and emit its ASR estimates."""
        unit = self.config.params.log_base.value
        estimates = run_campaign(self.config)
        frame = pd.DataFrame([estimate.to_dict() for estimate in estimates])
        frame = frame.rename(columns={"mean": f"mean_{unit}", "ci95_halfwidth": f"ci95_halfwidth_{unit}"})
        self._emit(frame.drop(columns=["log_base"]), "simulate.csv")
        return EXIT_OK

    def sweep(self) -> int:
        """Run a sweep over one axis."""
        values = _parse_values(self.args.values)
        if not values:
            raise ConfigError("sweep needs --values", key="values")
        spec = SweepSpec(
            axis=SweepAxis(self.args.axis),
            values=tuple(values),
            base=self.config,
            include_analytic=not self.args.no_analytic,
            include_reference_slopes=not self.args.no_reference,
            reference_anchor=self.args.anchor,
        )
        frame = run_sweep(spec)
        name = f"sweep_{spec.axis.value}"
        self._emit(frame, f"{name}.csv")
        if self.args.svg:
            unit = self.config.params.log_base.value
            write_svg_chart(
                frame,
                self.out_dir / f"{name}.svg",
                x_column=frame.columns[0],
                y_column=f"sum_{unit}",
                reference_column=f"reference_{unit}" if spec.include_reference_slopes else None,
            )
        return EXIT_OK

    def figure(self) -> int:
        """Run a figure preset."""
        run_figure_preset(self.args.name, self.out_dir, self.config, svg=self.args.svg)
        return EXIT_OK

    def validate(self) -> int:
        """Run the validation suite; the exit status is the overall verdict."""
        report = run_validation_suite(ValidationLevel(self.args.level), self.config)
        path = Path(self.args.report) if self.args.report else self.out_dir / "validation.json"
        report.write_json(path)
        for result in report.results:
            verdict = "PASS" if result.passed else "FAIL"
            print(f"[{verdict}] {result.id:2d} {result.name}: {result.measured:.6g} ({result.threshold})")
        return EXIT_OK if report.passed else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Path to a key = value configuration file")
    common.add_argument("--seed", type=int, help="Master seed")
    common.add_argument("--trials", type=int, help="Trials per campaign")
    common.add_argument("--out", default=os.getenv("IRSSIM_OUT", "results"), help="Output directory")
    common.add_argument("--stdout", action="store_true", help="Print CSV instead of writing a file")
    common.add_argument("--nats", action="store_true", help="Report rates in nats instead of bits")
    common.add_argument("--svg", action="store_true", help="Also write SVG charts")
    common.add_argument("--geometry", choices=["fixed", "random"], help="User placement mode")
    common.add_argument("--workers", type=int, help="Worker processes")
    common.add_argument("--estimator", choices=["mean_positive_rate", "jensen_bound"], help="ASR estimator")
    common.add_argument("--log-level", default="INFO", help="Logging level")
    common.add_argument("--no-progress", action="store_true", help="Disable progress bars")

    parser = argparse.ArgumentParser(description="IRS-assisted two-way secrecy simulator")
    commands = parser.add_subparsers(dest="command", required=True)

    analytic = commands.add_parser("analytic", parents=[common], help="Evaluate the ASR lower bounds")
    analytic.add_argument("--values", help="Comma-separated transmit powers in dBm")

    commands.add_parser("simulate", parents=[common], help="Run one Monte Carlo campaign")

    sweep = commands.add_parser("sweep", parents=[common], help="Sweep one system parameter")
    sweep.add_argument("--axis", required=True, choices=[axis.value for axis in SweepAxis])
    sweep.add_argument("--values", required=True, help="Comma-separated, strictly increasing grid")
    sweep.add_argument("--anchor", type=float, help="Grid value the reference curve passes through")
    sweep.add_argument("--no-analytic", action="store_true", help="Skip the analytic bound columns")
    sweep.add_argument("--no-reference", action="store_true", help="Skip the scaling reference column")

    figure = commands.add_parser("figure", parents=[common], help="Reproduce a figure preset")
    figure.add_argument("name", choices=[name.value for name in FigureName])

    validate = commands.add_parser("validate", parents=[common], help="Run the acceptance checks")
    validate.add_argument("--level", default=ValidationLevel.QUICK.value, choices=[lv.value for lv in ValidationLevel])
    validate.add_argument("--report", help="Path of the JSON report")
    return parser


def run_cli(argv: Optional[List[str]] = None) -> int:
    """
    Run the command-line interface.

    Args:
        argv: Arguments (defaults to sys.argv)

    Returns:
        Process exit status
    """
    load_dotenv()
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    try:
        app = SimulatorApp(args)
        logger.info(f"Running '{args.command}' with seed {app.config.seed}")
        return getattr(app, args.command)()
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG
    except (SecrecySimError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(run_cli())

"""
Trial engine for the IRS secrecy simulator.
Drives channel realizations through the schemes and aggregates ASR estimates.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from simulator.channels.fading import sample_realization
from simulator.errors import ContractError
from simulator.network.geometry import NetworkGeometry, fixed_geometry, sample_user_positions
from simulator.network.pathloss import PathlossSet, make_pathloss
from simulator.schemes import RELAY_TRIALS, SCHEDULED_TRIALS, TrialOutcome
from simulator.settings.system_config import CampaignConfig, Estimator, GeometryMode, LogBase, Scheme

# Configure logging
logger = logging.getLogger(__name__)

# Two-sided 95% normal quantile
Z95 = 1.96

# Chunks handed to each worker, so the progress bar moves smoothly
CHUNKS_PER_WORKER = 4


class Quantity(str, Enum):
    RATE_S1 = "rate_s1"
    RATE_S2 = "rate_s2"
    SUM = "sum"


@dataclass(frozen=True)
class AsrEstimate:
    """One aggregated ASR figure with its 95% confidence half-width."""
    scheme: Scheme
    quantity: Quantity
    mean: float
    ci95_halfwidth: float
    trials: int
    log_base: LogBase
    estimator: Estimator = Estimator.MEAN_POSITIVE_RATE

    def __post_init__(self):
        """Validate the estimate."""
        if self.trials < 1:
            raise ContractError("An estimate needs at least one trial")
        if self.ci95_halfwidth < 0.0:
            raise ContractError("Confidence half-width must be non-negative")

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to a flat dictionary.

        Returns:
            Dictionary representation
        """
        return {
            "scheme": Scheme(self.scheme).value,
            "quantity": Quantity(self.quantity).value,
            "mean": self.mean,
            "ci95_halfwidth": self.ci95_halfwidth,
            "trials": self.trials,
            "log_base": LogBase(self.log_base).value,
            "estimator": Estimator(self.estimator).value,
        }


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Independent random stream of trial ``index``; a pure function of (seed, index)."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def simulate_trial(
    index: int,
    config: CampaignConfig,
    geometry: Optional[NetworkGeometry] = None,
    pathloss: Optional[PathlossSet] = None,
) -> List[TrialOutcome]:
    """
    Run every requested scheme on one channel realization.

    Draw order inside the trial stream is fixed: user positions (random-disc
    mode only), the channel realization, then the relayed pair index.

    Args:
        index: Trial index
        config: Campaign configuration
        geometry: Fixed geometry to reuse (ignored in random-disc mode)
        pathloss: Pathloss of ``geometry``

    Returns:
        One TrialOutcome per requested scheme, in presentation order
    """
    params = config.params
    deployment = config.deployment
    rng = trial_rng(config.seed, index)

    if config.geometry_mode == GeometryMode.RANDOM_DISC:
        geometry = sample_user_positions(
            rng,
            params.pairs,
            deployment.disc_a_center,
            deployment.disc_b_center,
            deployment.disc_radius_m,
            irs_pos=deployment.irs_pos,
            eve_pos=deployment.eve_pos,
        )
        pathloss = make_pathloss(geometry, params)
    else:
        geometry = geometry or fixed_geometry(params.pairs, deployment)
        pathloss = pathloss or make_pathloss(geometry, params)

    realization = sample_realization(rng, params.elements, params.pairs, params.rli_mode, params.rli_w)
    relay_pair = int(rng.integers(params.pairs))

    outcomes = []
    for scheme in config.ordered_schemes():
        if scheme in SCHEDULED_TRIALS:
            outcome = SCHEDULED_TRIALS[scheme](realization, geometry, params, pathloss)
        else:
            outcome = RELAY_TRIALS[scheme](realization, geometry, params, pathloss, pair=relay_pair)
        outcomes.append(outcome)
    return outcomes


def _outcome_row(index: int, outcome: TrialOutcome) -> Dict[str, Any]:
    row = asdict(outcome)
    row["scheme"] = Scheme(outcome.scheme).value
    row["trial"] = index
    return row


def _run_chunk(config: CampaignConfig, start: int, stop: int) -> Dict[str, List[Dict[str, Any]]]:
    """Run trials [start, stop) and return their rows keyed by scheme value."""
    geometry = pathloss = None
    if config.geometry_mode == GeometryMode.FIXED:
        geometry = fixed_geometry(config.params.pairs, config.deployment)
        pathloss = make_pathloss(geometry, config.params)

    rows: Dict[str, List[Dict[str, Any]]] = {scheme.value: [] for scheme in config.ordered_schemes()}
    for index in range(start, stop):
        for outcome in simulate_trial(index, config, geometry, pathloss):
            rows[outcome.scheme.value].append(_outcome_row(index, outcome))
    return rows


def _chunk_bounds(trials: int, workers: int) -> List[Tuple[int, int]]:
    n_chunks = max(1, min(trials, workers * CHUNKS_PER_WORKER))
    size = math.ceil(trials / n_chunks)
    return [(start, min(start + size, trials)) for start in range(0, trials, size)]


@dataclass(frozen=True, eq=False)
class CampaignSamples:
    """Per-trial outcomes of a campaign, one DataFrame per scheme in trial order."""
    config: CampaignConfig
    frames: Dict[Scheme, pd.DataFrame]

    def frame(self, scheme: Scheme) -> pd.DataFrame:
        scheme = Scheme(scheme)
        if scheme not in self.frames:
            raise ContractError(f"Scheme {scheme.value} was not simulated")
        return self.frames[scheme]

    def secure_fraction(self, scheme: Scheme = Scheme.PROPOSED) -> float:
        """Fraction of trials where the scheduled SINR of s1 beats Eve's, gamma_a > gamma_e1."""
        frame = self.frame(scheme)
        return float(np.mean(frame["gamma_a"].to_numpy() > frame["gamma_e1"].to_numpy()))

    def schedule_frequencies(self, scheme: Scheme = Scheme.PROPOSED) -> np.ndarray:
        """Empirical selection frequency of every pair index."""
        scheduled = self.frame(scheme)["scheduled"].to_numpy(dtype=int)
        counts = np.bincount(scheduled, minlength=self.config.params.pairs)
        return counts / counts.sum()


def simulate_trials(config: CampaignConfig) -> CampaignSamples:
    """
    Run ``config.trials`` independent trials of every requested scheme.

    Trials are split in contiguous chunks; with more than one worker the chunks
    run in a process pool. Results are concatenated in trial-index order, so
    the samples do not depend on the worker count.

    Args:
        config: Campaign configuration

    Returns:
        CampaignSamples
    """
    bounds = _chunk_bounds(config.trials, config.workers)
    logger.info(
        f"Running {config.trials} trials of {[s.value for s in config.ordered_schemes()]} "
        f"(seed={config.seed}, workers={config.workers}, geometry={config.geometry_mode.value})"
    )
    progress = tqdm(total=config.trials, desc="trials", unit="trial", disable=not config.show_progress)

    chunks: List[Dict[str, List[Dict[str, Any]]]] = []
    if config.workers == 1:
        for start, stop in bounds:
            chunks.append(_run_chunk(config, start, stop))
            progress.update(stop - start)
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            futures = [executor.submit(_run_chunk, config, start, stop) for start, stop in bounds]
            for (start, stop), future in zip(bounds, futures):
                chunks.append(future.result())
                progress.update(stop - start)
    progress.close()

    frames = {}
    for scheme in config.ordered_schemes():
        rows = [row for chunk in chunks for row in chunk[scheme.value]]
        frames[scheme] = pd.DataFrame(rows)
    return CampaignSamples(config=config, frames=frames)


def _mean_ci(values: np.ndarray) -> Tuple[float, float]:
    n = values.size
    mean = float(np.mean(values))
    if n == 1:
        return mean, 0.0
    return mean, Z95 * float(np.std(values, ddof=1)) / math.sqrt(n)


def estimate_asr(
    frame: pd.DataFrame,
    scheme: Scheme,
    estimator: Estimator,
    log_base: LogBase,
) -> List[AsrEstimate]:
    """
    Aggregate one scheme's samples into rate_s1, rate_s2 and sum estimates.

    mean_positive_rate averages the per-trial secrecy rates. jensen_bound
    takes max(0, mean(legit) - mean(eve)) per signal, with the half-width from
    the paired per-trial differences.

    Args:
        frame: Samples of one scheme
        scheme: Scheme of the samples
        estimator: Estimator to apply
        log_base: Unit the samples are expressed in

    Returns:
        Three AsrEstimate entries
    """
    trials = len(frame)
    if trials == 0:
        raise ContractError(f"No samples for scheme {Scheme(scheme).value}")

    estimates = []
    if Estimator(estimator) == Estimator.MEAN_POSITIVE_RATE:
        columns = {
            Quantity.RATE_S1: frame["rate_s1"].to_numpy(),
            Quantity.RATE_S2: frame["rate_s2"].to_numpy(),
        }
        columns[Quantity.SUM] = columns[Quantity.RATE_S1] + columns[Quantity.RATE_S2]
        for quantity, values in columns.items():
            mean, half = _mean_ci(values)
            estimates.append(AsrEstimate(scheme, quantity, mean, half, trials, log_base, estimator))
        return estimates

    diff_1 = frame["legit_log_s1"].to_numpy() - frame["eve_log_s1"].to_numpy()
    diff_2 = frame["legit_log_s2"].to_numpy() - frame["eve_log_s2"].to_numpy()
    gap_1, half_1 = _mean_ci(diff_1)
    gap_2, half_2 = _mean_ci(diff_2)
    _, half_sum = _mean_ci(diff_1 + diff_2)
    rate_1 = max(0.0, gap_1)
    rate_2 = max(0.0, gap_2)
    estimates.append(AsrEstimate(scheme, Quantity.RATE_S1, rate_1, half_1, trials, log_base, estimator))
    estimates.append(AsrEstimate(scheme, Quantity.RATE_S2, rate_2, half_2, trials, log_base, estimator))
    estimates.append(AsrEstimate(scheme, Quantity.SUM, rate_1 + rate_2, half_sum, trials, log_base, estimator))
    return estimates


def run_campaign(config: CampaignConfig, samples: Optional[CampaignSamples] = None) -> List[AsrEstimate]:
    """
    Run a campaign and aggregate its ASR estimates.

    Args:
        config: Campaign configuration
        samples: Samples already simulated for ``config`` (optional)

    Returns:
        Estimates for every requested scheme and quantity
    """
    samples = samples or simulate_trials(config)
    estimates = []
    for scheme in config.ordered_schemes():
        estimates.extend(estimate_asr(samples.frame(scheme), scheme, config.estimator, config.params.log_base))
    for estimate in estimates:
        if estimate.quantity == Quantity.SUM:
            logger.info(
                f"{estimate.scheme.value}: sum ASR {estimate.mean:.4f} ± {estimate.ci95_halfwidth:.4f} "
                f"{estimate.log_base.value}"
            )
    return estimates

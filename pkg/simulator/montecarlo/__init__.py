"""
Monte Carlo trial engine and empirical-distribution tools.
"""

from simulator.montecarlo.engine import (
    AsrEstimate,
    CampaignSamples,
    Quantity,
    estimate_asr,
    run_campaign,
    simulate_trial,
    simulate_trials,
    trial_rng,
)
from simulator.montecarlo.statistics import EmpiricalCdf, empirical_cdf, ks_distance

__all__ = [
    "AsrEstimate",
    "CampaignSamples",
    "Quantity",
    "estimate_asr",
    "run_campaign",
    "simulate_trial",
    "simulate_trials",
    "trial_rng",
    "EmpiricalCdf",
    "empirical_cdf",
    "ks_distance",
]

"""
Transmission schemes: the proposed two-way scheme and its baselines.
"""

from simulator.schemes.base import TrialOutcome, log_scale
from simulator.schemes.sinr import SnrSet, eve_sinrs, legit_sinrs, make_snr_set, schedule
from simulator.schemes.proposed import proposed_trial
from simulator.schemes.oneway import oneway_jamming_trial
from simulator.schemes.relay import fd_relay_trial, hd_relay_trial
from simulator.settings.system_config import Scheme

# Relay baselines take the relayed pair as an extra argument
SCHEDULED_TRIALS = {
    Scheme.PROPOSED: proposed_trial,
    Scheme.ONEWAY_JAM: oneway_jamming_trial,
}
RELAY_TRIALS = {
    Scheme.FD_RELAY: fd_relay_trial,
    Scheme.HD_RELAY: hd_relay_trial,
}

__all__ = [
    "TrialOutcome",
    "log_scale",
    "SnrSet",
    "eve_sinrs",
    "legit_sinrs",
    "make_snr_set",
    "schedule",
    "proposed_trial",
    "oneway_jamming_trial",
    "fd_relay_trial",
    "hd_relay_trial",
    "SCHEDULED_TRIALS",
    "RELAY_TRIALS",
]

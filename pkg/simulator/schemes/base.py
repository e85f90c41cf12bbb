"""
Per-trial outcome record shared by every transmission scheme.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from simulator.settings.system_config import LogBase, Scheme


def log_scale(log_base) -> float:
    """Divisor converting nats to the requested logarithm base."""
    return math.log(2.0) if LogBase(log_base) == LogBase.BITS else 1.0


@dataclass(frozen=True)
class TrialOutcome:
    """
    Scheduled pair, SINRs and secrecy rates of one trial of one scheme.

    ``prelog`` is 1 for single-slot schemes and 1/2 for two-slot ones; the
    four ``*_log_*`` fields hold prelog * log(1 + SINR) so that both ASR
    estimators can be formed from the same record. ``eve_decoded_s1`` is the
    SIC branch taken by Eve and is None for schemes where Eve runs no SIC.
    """
    scheme: Scheme
    scheduled: int
    gamma_a: float
    gamma_b: float
    gamma_e1: float
    gamma_e2: float
    eve_decoded_s1: Optional[bool]
    rate_s1: float
    rate_s2: float
    legit_log_s1: float
    legit_log_s2: float
    eve_log_s1: float
    eve_log_s2: float
    prelog: float = 1.0

    @classmethod
    def from_sinrs(
        cls,
        scheme: Scheme,
        scheduled: int,
        gamma_a: float,
        gamma_b: float,
        gamma_e1: float,
        gamma_e2: float,
        log_base=LogBase.NATS,
        prelog: float = 1.0,
        sic: bool = False,
    ) -> "TrialOutcome":
        """Build an outcome and derive the rates from the SINRs; ``sic`` marks schemes where Eve runs SIC."""
        scale = prelog / log_scale(log_base)
        legit_1 = scale * float(np.log1p(gamma_a))
        legit_2 = scale * float(np.log1p(gamma_b))
        eve_1 = scale * float(np.log1p(gamma_e1))
        eve_2 = scale * float(np.log1p(gamma_e2))
        return cls(
            scheme=Scheme(scheme),
            scheduled=int(scheduled),
            gamma_a=float(gamma_a),
            gamma_b=float(gamma_b),
            gamma_e1=float(gamma_e1),
            gamma_e2=float(gamma_e2),
            eve_decoded_s1=bool(gamma_e1 >= gamma_a) if sic else None,
            rate_s1=max(0.0, legit_1 - eve_1),
            rate_s2=max(0.0, legit_2 - eve_2),
            legit_log_s1=legit_1,
            legit_log_s2=legit_2,
            eve_log_s1=eve_1,
            eve_log_s2=eve_2,
            prelog=prelog,
        )

    @property
    def sum_rate(self) -> float:
        return self.rate_s1 + self.rate_s2

"""
Closed-form secrecy-rate evaluators: cascaded-gain CDF, ASR lower bounds and
scaling references.
"""

from analysis.bounds.lemma import (
    MU,
    NU,
    Lemma1Params,
    lemma1_cdf,
    lemma1_params,
    sample_scheduled_zeta,
    scheduled_cdf,
)
from analysis.bounds.theorem import (
    AnalyticInputs,
    BoundBreakdown,
    analytic_inputs,
    bound_breakdown,
    j1_term,
    j2_term,
    q_e1,
    q_e2,
    q_m,
    theorem1_bounds,
)
from analysis.bounds.scaling import ScalingKind, scaling_reference

__all__ = [
    "MU",
    "NU",
    "Lemma1Params",
    "lemma1_cdf",
    "lemma1_params",
    "sample_scheduled_zeta",
    "scheduled_cdf",
    "AnalyticInputs",
    "BoundBreakdown",
    "analytic_inputs",
    "bound_breakdown",
    "j1_term",
    "j2_term",
    "q_e1",
    "q_e2",
    "q_m",
    "theorem1_bounds",
    "ScalingKind",
    "scaling_reference",
]

"""
One-way baseline with a cooperative jammer.
The users take turns: one sends data while the other jams Eve.
"""

import logging

from simulator.channels.fading import ChannelRealization
from simulator.channels.reflection import cascaded_zetas, eve_effective, optimal_phases_and_zeta
from simulator.network.geometry import NetworkGeometry
from simulator.network.pathloss import make_pathloss
from simulator.schemes.base import TrialOutcome
from simulator.schemes.sinr import legit_sinrs, make_snr_set, schedule
from simulator.settings.system_config import Scheme

# Configure logging
logger = logging.getLogger(__name__)

ONEWAY_PRELOG = 0.5


def oneway_jamming_trial(realization: ChannelRealization, geometry: NetworkGeometry, params, pathloss=None) -> TrialOutcome:
    """
    Run one trial of the one-way jamming baseline over two phases.

    Phase 1: A sends s1 and B jams; B removes its own jamming reflection.
    Phase 2 swaps the roles. Both phases share the channel block and the
    IRS configuration of the scheduled pair.

    Args:
        realization: Fading draw for all pairs
        geometry: Node geometry
        params: SystemParams
        pathloss: Precomputed PathlossSet for ``geometry`` (optional)

    Returns:
        TrialOutcome with the 1/2 pre-log applied
    """
    pathloss = pathloss or make_pathloss(geometry, params)
    pair = schedule(cascaded_zetas(realization.h, realization.g))
    phases, zeta = optimal_phases_and_zeta(realization.h[pair], realization.g[pair])
    eff = eve_effective(realization, phases, pathloss, pair)

    rli_draws = None
    if realization.rli_a is not None:
        rli_draws = (realization.rli_a[pair], realization.rli_b[pair])
    gamma_a, gamma_b = legit_sinrs(
        zeta,
        make_snr_set(params, pathloss, pair),
        params.rli_mode,
        rli_draws,
        noise_w=params.noise_w,
        power_w=params.power_w,
        pathloss=pathloss,
        pair=pair,
    )

    power, noise = params.power_w, params.noise_w
    phi2, psi2 = abs(eff.phi) ** 2, abs(eff.psi) ** 2
    # The jammer's channel to Eve is the same effective channel it would use for data
    gamma_e1 = power * phi2 / (power * psi2 + noise)
    gamma_e2 = power * psi2 / (power * phi2 + noise)
    return TrialOutcome.from_sinrs(
        Scheme.ONEWAY_JAM, pair, gamma_a, gamma_b, gamma_e1, gamma_e2, params.log_base, prelog=ONEWAY_PRELOG
    )

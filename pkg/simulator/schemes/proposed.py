"""
Proposed IRS-assisted two-way scheme.
Each user's signal doubles as information jamming against the other's at Eve.
"""

import logging

from simulator.channels.fading import ChannelRealization
from simulator.channels.reflection import cascaded_zetas, eve_effective, optimal_phases_and_zeta
from simulator.network.geometry import NetworkGeometry
from simulator.network.pathloss import make_pathloss
from simulator.schemes.base import TrialOutcome
from simulator.schemes.sinr import eve_sinrs, legit_sinrs, make_snr_set, schedule
from simulator.settings.system_config import Scheme

# Configure logging
logger = logging.getLogger(__name__)


def proposed_trial(realization: ChannelRealization, geometry: NetworkGeometry, params, pathloss=None) -> TrialOutcome:
    """
    Run one trial of the proposed scheme.

    Args:
        realization: Fading draw for all pairs
        geometry: Node geometry
        params: SystemParams
        pathloss: Precomputed PathlossSet for ``geometry`` (optional)

    Returns:
        TrialOutcome
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
    gamma_e1, gamma_e2, decoded = eve_sinrs(eff, gamma_a, params.power_w, params.noise_w)
    logger.debug(f"Proposed trial: pair={pair} zeta={zeta:.4g} gamma_e1={gamma_e1:.4g} decoded={decoded}")
    return TrialOutcome.from_sinrs(
        Scheme.PROPOSED, pair, gamma_a, gamma_b, gamma_e1, gamma_e2, params.log_base, sic=True
    )

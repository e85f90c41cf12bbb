"""
Tests for the SINR building blocks and the four transmission schemes.
"""

import math

import numpy as np
import pytest

from simulator.channels import (
    ChannelRealization,
    EveEffective,
    cascaded_zetas,
    complex_gaussian,
    eve_effective,
    optimal_phases_and_zeta,
    sample_realization,
)
from simulator.errors import ContractError, DomainError, PairIndexError
from simulator.montecarlo import Quantity, run_campaign
from simulator.schemes import (
    SnrSet,
    TrialOutcome,
    eve_sinrs,
    fd_relay_trial,
    hd_relay_trial,
    legit_sinrs,
    make_snr_set,
    oneway_jamming_trial,
    proposed_trial,
    schedule,
)
from simulator.schemes.relay import amplification_sq, relay_channels
from simulator.settings.system_config import CampaignConfig, LogBase, RliMode, Scheme


def test_schedule_picks_largest_gain():
    assert schedule([0.5, 3.0, 2.0]) == 1
    assert schedule([2.0, 2.0, 1.0]) == 0
    with pytest.raises(ContractError):
        schedule([])


def test_snr_set_at_defaults(params, pathloss):
    snr = make_snr_set(params.copy(update={"power_dbm": 20.0}), pathloss)
    assert snr.rho_ab == pytest.approx(0.1 * pathloss.beta_irs_ab[0] / (1e-7 + 1e-10))
    assert snr.rho_ab == pytest.approx(snr.rho_ba)
    assert snr.rho_0 == pytest.approx(1e9)
    with pytest.raises(PairIndexError):
        make_snr_set(params, pathloss, 10)


def test_deterministic_legit_sinrs(params, pathloss):
    snr = make_snr_set(params, pathloss)
    gamma_a, gamma_b = legit_sinrs(900.0, snr, RliMode.DETERMINISTIC)
    assert gamma_a == pytest.approx(snr.rho_ab * 900.0)
    assert gamma_b == pytest.approx(snr.rho_ba * 900.0)
    assert legit_sinrs(0.0, snr, "deterministic") == (0.0, 0.0)


def test_legit_sinr_contracts(params, pathloss):
    snr = make_snr_set(params, pathloss)
    with pytest.raises(ContractError):
        legit_sinrs(-1.0, snr, "deterministic")
    with pytest.raises(ContractError):
        legit_sinrs(1.0, snr, "sampled")


def test_sampled_legit_sinrs(params, pathloss):
    snr = make_snr_set(params, pathloss)
    gamma_a, _ = legit_sinrs(
        10.0,
        snr,
        "sampled",
        (complex(1e-4, 0.0), complex(0.0, 0.0)),
        noise_w=params.noise_w,
        power_w=params.power_w,
        pathloss=pathloss,
        pair=0,
    )
    expected = params.power_w * pathloss.beta_irs_ab[0] * 10.0 / (1e-8 + params.noise_w)
    assert gamma_a == pytest.approx(expected)


def test_eve_decodes_first_signal_only_when_stronger():
    eff = EveEffective(phi=complex(2.0, 0.0), psi=complex(1.0, 0.0), var_phi=1.0, var_psi=1.0)
    gamma_e1, gamma_e2, decoded = eve_sinrs(eff, gamma_a=1.0, power_w=1.0, noise_w=1.0)
    assert gamma_e1 == pytest.approx(4.0 / 2.0)
    assert decoded
    assert gamma_e2 == pytest.approx(1.0)

    gamma_e1, gamma_e2, decoded = eve_sinrs(eff, gamma_a=10.0, power_w=1.0, noise_w=1.0)
    assert not decoded
    assert gamma_e2 == pytest.approx(1.0 / 5.0)


def test_outcome_rates_are_clipped_and_scaled():
    outcome = TrialOutcome.from_sinrs(Scheme.PROPOSED, 2, 3.0, 0.5, 1.0, 2.0)
    assert outcome.rate_s1 == pytest.approx(math.log(4.0) - math.log(2.0))
    assert outcome.rate_s2 == 0.0
    assert outcome.sum_rate == pytest.approx(outcome.rate_s1)
    assert not outcome.eve_decoded_s1

    bits = TrialOutcome.from_sinrs(Scheme.HD_RELAY, 0, 3.0, 0.5, 1.0, 2.0, LogBase.BITS, prelog=0.5)
    assert bits.rate_s1 == pytest.approx(0.5 * math.log2(2.0))
    assert bits.legit_log_s1 == pytest.approx(0.5 * math.log2(4.0))
    assert bits.prelog == 0.5


def test_proposed_trial_schedules_best_pair(rng, geometry, params, pathloss):
    realization = sample_realization(rng, params.elements, params.pairs)
    outcome = proposed_trial(realization, geometry, params, pathloss)
    assert outcome.scheme == Scheme.PROPOSED
    assert outcome.scheduled == int(np.argmax(cascaded_zetas(realization.h, realization.g)))
    assert outcome.gamma_a > 0.0
    assert outcome.rate_s1 >= 0.0 and outcome.rate_s2 >= 0.0
    assert outcome.prelog == 1.0


def test_proposed_trial_sampled_rli(rng, geometry, params):
    sampled = params.copy(update={"rli_mode": RliMode.SAMPLED})
    realization = sample_realization(rng, params.elements, params.pairs, "sampled", params.rli_w)
    outcome = proposed_trial(realization, geometry, sampled)
    assert outcome.gamma_a > 0.0


def test_oneway_trial_pays_half_prelog(rng, geometry, params, pathloss):
    realization = sample_realization(rng, params.elements, params.pairs)
    outcome = oneway_jamming_trial(realization, geometry, params, pathloss)
    assert outcome.scheme == Scheme.ONEWAY_JAM
    assert outcome.prelog == 0.5
    assert outcome.legit_log_s1 == pytest.approx(0.5 * math.log1p(outcome.gamma_a))


def test_relay_channels(rng):
    realization = sample_realization(rng, 8, 3)
    ch = relay_channels(realization, 1)
    assert ch.norm_h2 == pytest.approx(np.sum(np.abs(realization.h[1]) ** 2))
    assert 0.0 <= ch.gu2 <= ch.norm_g2 * (1 + 1e-12)


@pytest.mark.parametrize("trial, scheme, prelog", [
    (fd_relay_trial, Scheme.FD_RELAY, 1.0),
    (hd_relay_trial, Scheme.HD_RELAY, 0.5),
])
def test_relay_trials(rng, geometry, params, pathloss, trial, scheme, prelog):
    realization = sample_realization(rng, params.elements, params.pairs)
    outcome = trial(realization, geometry, params, pathloss, pair=4)
    assert outcome.scheme == scheme
    assert outcome.scheduled == 4
    assert outcome.prelog == prelog
    assert min(outcome.gamma_a, outcome.gamma_b, outcome.gamma_e1, outcome.gamma_e2) > 0.0
    with pytest.raises(PairIndexError):
        trial(realization, geometry, params, pathloss, pair=10)


@pytest.mark.parametrize("factor", [1e-6, 3.0, 1e9])
def test_schedule_ignores_common_scaling(rng, factor):
    for _ in range(50):
        zetas = rng.exponential(size=10)
        assert schedule(factor * zetas) == schedule(zetas)


def test_schedule_is_fair_across_iid_pairs(rng):
    zetas = cascaded_zetas(complex_gaussian(rng, (50000, 10, 4)), complex_gaussian(rng, (50000, 10, 4)))
    picks = np.array([schedule(row) for row in zetas])
    frequencies = np.bincount(picks, minlength=10) / picks.size
    assert np.all(np.abs(frequencies - 0.1) <= 0.01)


def test_sic_branch_matches_direct_evaluation(rng):
    power, noise = 1.0, 1e-3
    for _ in range(500):
        phi, psi = complex_gaussian(rng, 2)
        eff = EveEffective(phi=complex(phi), psi=complex(psi), var_phi=1.0, var_psi=1.0)
        gamma_a = float(rng.exponential(5.0))
        gamma_e1, gamma_e2, decoded = eve_sinrs(eff, gamma_a, power, noise)

        phi2, psi2 = abs(phi) ** 2, abs(psi) ** 2
        interfered = power * psi2 / (power * phi2 + noise)
        assert gamma_e1 == pytest.approx(power * phi2 / (power * psi2 + noise))
        assert decoded == (gamma_e1 >= gamma_a)
        if decoded:
            assert gamma_e2 == pytest.approx(power * psi2 / noise)
            assert gamma_e2 >= interfered
        else:
            assert gamma_e2 == pytest.approx(interfered)


def test_only_the_proposed_scheme_reports_a_sic_branch(rng, geometry, params, pathloss):
    realization = sample_realization(rng, params.elements, params.pairs)
    proposed = proposed_trial(realization, geometry, params, pathloss)
    assert isinstance(proposed.eve_decoded_s1, bool)
    assert proposed.eve_decoded_s1 == (proposed.gamma_e1 >= proposed.gamma_a)
    assert oneway_jamming_trial(realization, geometry, params, pathloss).eve_decoded_s1 is None
    assert fd_relay_trial(realization, geometry, params, pathloss, pair=2).eve_decoded_s1 is None
    assert hd_relay_trial(realization, geometry, params, pathloss, pair=2).eve_decoded_s1 is None


def test_oneway_without_jamming_leakage(rng, geometry, params, pathloss):
    # B's channels to Eve vanish, so the jamming term drops out
    drawn = sample_realization(rng, params.elements, params.pairs)
    realization = ChannelRealization(
        h=drawn.h,
        g=np.zeros_like(drawn.g),
        h_e=drawn.h_e,
        h_ne=drawn.h_ne,
        g_ne=np.zeros_like(drawn.g_ne),
    )
    outcome = oneway_jamming_trial(realization, geometry, params, pathloss)
    phases, _ = optimal_phases_and_zeta(realization.h[outcome.scheduled], realization.g[outcome.scheduled])
    eff = eve_effective(realization, phases, pathloss, outcome.scheduled)
    assert abs(eff.psi) == 0.0
    assert outcome.gamma_e1 == pytest.approx(params.power_w * abs(eff.phi) ** 2 / params.noise_w)
    assert outcome.gamma_e2 == 0.0


def test_fd_relay_collapses_under_strong_loop_interference(rng, geometry, params):
    loud = params.copy(update={"rli_dbm": 100.0})
    realization = sample_realization(rng, params.elements, params.pairs)
    outcome = fd_relay_trial(realization, geometry, loud, pair=1)
    assert outcome.gamma_a < 1e-9 and outcome.gamma_b < 1e-9
    assert outcome.rate_s1 == 0.0 and outcome.rate_s2 == 0.0


def test_half_duplex_gain_is_at_least_full_duplex_gain(rng, params, pathloss):
    realization = sample_realization(rng, params.elements, params.pairs)
    for pair in range(params.pairs):
        ch = relay_channels(realization, pair)
        args = (params.power_w, float(pathloss.beta_ar[pair]), float(pathloss.beta_br[pair]), ch)
        kappa_h2 = amplification_sq(*args, params.noise_w)
        kappa_f2 = amplification_sq(*args, params.rli_w + params.noise_w)
        assert kappa_h2 >= kappa_f2 > 0.0


def test_half_prelog_halves_every_rate():
    full = TrialOutcome.from_sinrs(Scheme.FD_RELAY, 0, 40.0, 9.0, 2.0, 0.5)
    half = TrialOutcome.from_sinrs(Scheme.HD_RELAY, 0, 40.0, 9.0, 2.0, 0.5, prelog=0.5)
    assert half.rate_s1 == pytest.approx(0.5 * full.rate_s1)
    assert half.rate_s2 == pytest.approx(0.5 * full.rate_s2)
    assert half.sum_rate == pytest.approx(0.5 * full.sum_rate)
    assert half.eve_log_s2 == pytest.approx(0.5 * full.eve_log_s2)


def test_relay_link_budget_dominates_at_user_gain(rng, geometry, params, pathloss):
    # A relay hop pays one distance; the IRS product pays both plus the element area
    assert pathloss.beta_ar[0] / pathloss.beta_irs_ab[0] > 1e5
    attenuated = params.copy(update={"relay_gain_dbi": -60.0})
    fd, fd_attenuated, proposed = [], [], []
    for _ in range(50):
        realization = sample_realization(rng, params.elements, params.pairs)
        fd.append(fd_relay_trial(realization, geometry, params, pathloss, pair=0).legit_log_s1)
        fd_attenuated.append(fd_relay_trial(realization, geometry, attenuated, pair=0).legit_log_s1)
        proposed.append(proposed_trial(realization, geometry, params, pathloss).legit_log_s1)
    assert np.mean(fd) > np.mean(proposed)
    assert np.mean(fd_attenuated) < np.mean(proposed)


def test_scheme_ordering_with_attenuated_relay():
    config = CampaignConfig(trials=200, seed=11).with_params(relay_gain_dbi=-60.0)
    sums = {e.scheme: e for e in run_campaign(config) if e.quantity == Quantity.SUM}
    proposed, oneway = sums[Scheme.PROPOSED], sums[Scheme.ONEWAY_JAM]
    relay = max((sums[Scheme.FD_RELAY], sums[Scheme.HD_RELAY]), key=lambda e: e.mean)
    assert proposed.mean - proposed.ci95_halfwidth > oneway.mean + oneway.ci95_halfwidth
    assert oneway.mean - oneway.ci95_halfwidth > relay.mean + relay.ci95_halfwidth


def test_snr_set_rejects_non_positive_constants():
    with pytest.raises(DomainError):
        SnrSet(rho_ab=1.0, rho_ba=0.0, rho_0=1.0)

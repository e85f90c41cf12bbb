"""
Tests for the configuration models and the flat config loader.
"""

import pytest
from pydantic import ValidationError

from simulator.errors import ConfigError
from simulator.settings.config_loader import env_bindings, load_config, parse_config
from simulator.settings.system_config import (
    ALL_SCHEMES,
    CampaignConfig,
    Estimator,
    GeometryMode,
    LogBase,
    RliMode,
    Scheme,
    SystemParams,
)


def test_simulation_defaults():
    config = CampaignConfig()
    params = config.params
    assert params.elements == 32
    assert params.pairs == 10
    assert params.quad_order == 20
    assert params.noise_dbm == -70.0
    assert params.rli_dbm == -40.0
    assert params.pathloss_exp == 3.0
    assert params.gain_user_dbi == params.gain_eve_dbi == 15.0
    assert params.element_area_m2 == 0.1
    assert params.rli_mode == RliMode.DETERMINISTIC
    assert config.deployment.irs_pos == (15.0, 0.0)
    assert config.deployment.eve_pos == (15.0, 20.0)
    assert config.deployment.disc_radius_m == 5.0
    assert config.ordered_schemes() == ALL_SCHEMES
    assert config.estimator == Estimator.MEAN_POSITIVE_RATE


def test_params_are_validated_and_frozen():
    with pytest.raises(ValidationError):
        SystemParams(elements=0)
    with pytest.raises(ValidationError):
        SystemParams(unknown=1)
    params = SystemParams()
    with pytest.raises(TypeError):
        params.elements = 64


def test_empty_document_gives_defaults():
    assert parse_config("") == CampaignConfig()


def test_single_override():
    config = parse_config("elements = 64\n")
    assert config.params.elements == 64
    assert config.params.pairs == 10
    assert config.params.power_dbm == 30.0


def test_full_document():
    text = """
# system
power_dbm = 25.5
rli_mode = sampled
log_base = bits

# deployment
irs_pos = 10,5
disc_radius_m = 0

# campaign
geometry_mode = random_disc
trials = 123
schemes = proposed, hd_relay
estimator = jensen_bound
"""
    config = parse_config(text)
    assert config.params.power_dbm == 25.5
    assert config.params.rli_mode == RliMode.SAMPLED
    assert config.params.log_base == LogBase.BITS
    assert config.deployment.irs_pos == (10.0, 5.0)
    assert config.geometry_mode == GeometryMode.RANDOM_DISC
    assert config.trials == 123
    assert config.ordered_schemes() == (Scheme.PROPOSED, Scheme.HD_RELAY)
    assert config.estimator == Estimator.JENSEN_BOUND


def test_unknown_key_names_key_and_line():
    with pytest.raises(ConfigError) as info:
        parse_config("elements = 16\nflux_capacitor = 1\n")
    assert info.value.key == "flux_capacitor"
    assert info.value.line == 2
    assert "flux_capacitor" in str(info.value)


def test_invalid_value_reports_line():
    with pytest.raises(ConfigError) as info:
        parse_config("# comment\n\nelements = 0\n")
    assert info.value.key == "elements"
    assert info.value.line == 3


def test_type_mismatch_reports_line():
    with pytest.raises(ConfigError) as info:
        parse_config("trials = many\n")
    assert info.value.key == "trials"
    assert info.value.line == 1


def test_environment_layer():
    bindings = env_bindings({"IRSSIM_TRIALS": "2000", "IRSSIM_BOGUS": "1", "PATH": "/bin"})
    assert bindings == {"trials": ("2000", None)}


def test_layering_order(tmp_path):
    path = tmp_path / "campaign.cfg"
    path.write_text("trials = 300\nelements = 16\n", encoding="utf-8")
    config = load_config(
        str(path),
        overrides={"trials": 50, "seed": None},
        environ={"IRSSIM_TRIALS": "2000", "IRSSIM_PAIRS": "4"},
        defaults={"log_base": "bits"},
    )
    assert config.trials == 50
    assert config.params.elements == 16
    assert config.params.pairs == 4
    assert config.params.log_base == LogBase.BITS
    assert config.seed == CampaignConfig().seed


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "absent.cfg"), environ={})


def test_copies_revalidate():
    config = CampaignConfig()
    assert config.with_params(elements=8).params.elements == 8
    assert config.with_campaign(trials=5).trials == 5
    with pytest.raises(ValidationError):
        config.with_campaign(trials=0)
    with pytest.raises(ValidationError):
        config.with_campaign(schemes="")


def test_relay_gain_defaults_to_user_gain():
    params = SystemParams()
    assert params.relay_gain_dbi is None
    assert params.gain_relay == pytest.approx(params.gain_user)
    assert SystemParams(relay_gain_dbi=-60.0).gain_relay == pytest.approx(1e-6)
    assert parse_config("relay_gain_dbi = -60\n").params.relay_gain_dbi == -60.0

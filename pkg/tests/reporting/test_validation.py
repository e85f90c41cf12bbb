"""
Tests for the validation suite runner.
"""

import json
import math

from reporting import validation
from reporting.validation import CriterionResult, ValidationLevel, run_validation_suite
from simulator.errors import DomainError
from simulator.settings.system_config import CampaignConfig


def test_closed_form_criterion_passes():
    report = run_validation_suite("quick", CampaignConfig(seed=3), criteria=[3])
    assert report.level == ValidationLevel.QUICK
    assert [result.id for result in report.results] == [3]
    assert report.passed
    assert report.results[0].seconds >= 0.0


def test_failures_are_reported(mocker):
    def failing(base, level):
        return CriterionResult(1, "failing", 2.0, "<= 1", False)

    def raising(base, level):
        raise DomainError("bad input")

    mocker.patch.dict(validation.CRITERIA, {1: failing, 2: raising}, clear=True)
    report = run_validation_suite(ValidationLevel.QUICK)
    assert not report.passed
    errored = report.results[1]
    assert errored.id == 2 and not errored.passed
    assert math.isnan(errored.measured)
    assert "bad input" in errored.detail


def test_suite_forces_nats_and_fixed_geometry(mocker):
    seen = {}

    def capture(base, level):
        seen["config"] = base
        return CriterionResult(1, "capture", 0.0, "", True)

    mocker.patch.dict(validation.CRITERIA, {1: capture}, clear=True)
    config = CampaignConfig(geometry_mode="random_disc").with_params(log_base="bits")
    assert run_validation_suite("full", config).passed
    assert seen["config"].params.log_base.value == "nats"
    assert seen["config"].geometry_mode.value == "fixed"


def test_report_json(tmp_path):
    report = validation.ValidationReport(ValidationLevel.FULL, 5, [CriterionResult(3, "x", 0.001, "<= 0.01", True)])
    path = report.write_json(tmp_path / "report.json")
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["level"] == "full"
    assert data["passed"] is True
    assert data["criteria"][0]["id"] == 3


def test_scheme_ordering_attenuates_only_the_relay(mocker):
    runs = []
    real = validation.run_campaign

    def recording(config):
        runs.append(config)
        return real(config)

    mocker.patch.object(validation, "run_campaign", side_effect=recording)
    mocker.patch.dict(validation.SCALE, {5: (200, 200)})
    result = validation.scheme_ordering(CampaignConfig(seed=11), ValidationLevel.QUICK)
    assert runs[0].params.relay_gain_dbi is None
    assert runs[1].params.relay_gain_dbi == validation.RELAY_ATTENUATED_GAIN_DBI
    assert set(runs[1].schemes) == set(validation.RELAY_SCHEMES)
    assert "relay hop / IRS product pathloss" in result.detail
    assert result.passed

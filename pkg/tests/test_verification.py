"""Tests for the property suites and the verification runner."""

import numpy as np
import pytest

import whitney.forms.whitney as whitney_forms
from whitney.models.metric import MetricSignature
from whitney.models.report import SuiteStatus
from whitney.models.run_config import Command, RunConfig
from whitney.verification import BaseSuite, TrialOutcome, VerificationRunner, default_suites
from whitney.verification.representation import TriRepresentationSuite


@pytest.fixture
def quick_config():
    """Small run over dimensions 2 and 3 and both signatures."""
    return RunConfig(command=Command.VERIFY, dims=[2, 3], signatures="both", trials=3, points=3, seed=7)


class ExplodingSuite(BaseSuite):
    name = "exploding"
    description = "Always raises"

    def run_trial(self, rng, g, points):
        raise RuntimeError("boom")


class ConstantSuite(BaseSuite):
    name = "constant"
    description = "Reports a fixed residual"
    tolerance = 1e-3

    def __init__(self, residual: float) -> None:
        self.residual = residual

    def run_trial(self, rng, g, points):
        return TrialOutcome(self.residual, points)


class TestRunner:
    """Tests for VerificationRunner."""

    def test_all_suites_pass(self, quick_config):
        """Every default suite passes on a small run."""
        report = VerificationRunner().run(quick_config)
        failing = {r.name: (r.status, r.max_residual, r.worst_case, r.error) for r in report.results if not r.passed}
        assert failing == {}
        assert report.passed
        assert report.suites_run == [suite.name for suite in default_suites()]

    def test_deterministic(self, quick_config):
        """The same seed reproduces the same residuals."""
        first = VerificationRunner().run(quick_config)
        second = VerificationRunner().run(quick_config)
        assert [r.max_residual for r in first.results] == [r.max_residual for r in second.results]

    def test_threaded_matches_serial(self, quick_config):
        """Suites own their generators, so scheduling does not matter."""
        serial = VerificationRunner().run(quick_config)
        threaded = VerificationRunner().run(quick_config.model_copy(update={"threads": 4}))
        assert [r.max_residual for r in serial.results] == [r.max_residual for r in threaded.results]

    def test_error_isolated(self, quick_config):
        """A raising suite is reported without stopping the others."""
        report = VerificationRunner([ExplodingSuite(), ConstantSuite(0.0)]).run(quick_config)
        assert report.results[0].status == SuiteStatus.ERROR
        assert "boom" in report.errors[0]
        assert report.results[1].status == SuiteStatus.PASSED
        assert not report.passed

    def test_tolerance_enforced(self, quick_config):
        """A residual above tolerance fails the suite."""
        report = VerificationRunner([ConstantSuite(0.5)]).run(quick_config)
        assert report.failed_suites() == ["constant"]

    def test_lorentz_only_suite_skipped_for_euclid(self):
        """Boost equivariance only runs when a Lorentzian signature is configured."""
        config = RunConfig(command=Command.VERIFY, dims=[2], signatures="euclid", trials=2, points=2)
        report = VerificationRunner().run(config)
        assert "lorentz_equivariance" not in report.suites_run
        assert "tri_representation" in report.suites_run
        assert report.passed


class TestMutation:
    """The suites catch a broken permutation sign."""

    def test_negated_sign_fails(self, quick_config, monkeypatch):
        """Flipping sgn(rho u tau) breaks agreement with the barycentric formula."""
        original = whitney_forms.perm_sign
        monkeypatch.setattr(whitney_forms, "perm_sign", lambda *args, **kwargs: -original(*args, **kwargs))
        report = VerificationRunner([TriRepresentationSuite()]).run(quick_config)
        assert report.failed_suites() == ["tri_representation"]


class TestSuites:
    """Spot checks of individual suites."""

    @pytest.mark.parametrize("dim", [3, 4])
    @pytest.mark.parametrize("suite", default_suites(), ids=lambda s: s.name)
    def test_single_trial(self, suite, dim):
        """One Lorentzian trial stays under tolerance."""
        if suite.signature_kinds is not None and "lorentz" not in suite.signature_kinds:
            pytest.skip("suite excludes Lorentzian signatures")
        outcome = suite.run_trial(np.random.default_rng(3), MetricSignature.lorentzian(dim), 4)
        assert outcome.residual < suite.tolerance

"""Runs every property suite and collects a verification report."""

import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from whitney.logging_config import get_logger
from whitney.models.report import SuiteResult, SuiteStatus, VerificationReport
from whitney.models.run_config import RunConfig

from .base import BaseSuite
from .closedness import ClosednessSuite, DecompositionSuite
from .hodge import HodgeIdentitySuite
from .normalization import NormalizationSuite
from .representation import (
    LorentzEquivarianceSuite,
    MetricIndependenceSuite,
    StructureSuite,
    TriRepresentationSuite,
)

logger = get_logger(__name__)


def default_suites() -> list[BaseSuite]:
    return [
        TriRepresentationSuite(),
        StructureSuite(),
        NormalizationSuite(),
        ClosednessSuite(),
        DecompositionSuite(),
        HodgeIdentitySuite(),
        MetricIndependenceSuite(),
        LorentzEquivarianceSuite(),
    ]


class VerificationRunner:
    """
    Orchestrates the property suites behind `whitney verify`.

    Each suite draws from its own generator spawned from the configured seed,
    so results do not depend on how suites are scheduled across threads. A
    suite that raises is reported as an error without stopping the others.
    """

    def __init__(self, suites: list[BaseSuite] | None = None) -> None:
        self.suites = suites if suites is not None else default_suites()

    def run(self, config: RunConfig) -> VerificationReport:
        start_time = time.monotonic()
        report = VerificationReport(
            seed=config.seed,
            dims=config.dims,
            signatures=[str(kind) for kind in config.signatures],
            trials=config.trials,
        )

        streams = np.random.SeedSequence(config.seed).spawn(len(self.suites))
        jobs = [(suite, stream) for suite, stream in zip(self.suites, streams) if suite.applies_to(config)]
        for suite in self.suites:
            if not suite.applies_to(config):
                logger.info(f"Skipping suite {suite.name}: no matching signature")
        workers = min(config.threads, max(1, len(jobs)))
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda job: self._run_suite(job[0], config, job[1]), jobs))
        else:
            results = [self._run_suite(suite, config, stream) for suite, stream in jobs]

        for (suite, _), result in zip(jobs, results):
            report.results.append(result)
            report.suites_run.append(suite.name)
            if result.status == SuiteStatus.ERROR:
                report.errors.append(f"{suite.name}: {result.error}")

        report.processing_time_ms = int((time.monotonic() - start_time) * 1000)
        return report

    def _run_suite(
        self, suite: BaseSuite, config: RunConfig, stream: np.random.SeedSequence
    ) -> SuiteResult:
        """Run a single suite with error handling."""
        try:
            return suite.run(config, np.random.default_rng(stream))
        except Exception as e:
            logger.error(f"Suite {suite.name} failed: {e}")
            return SuiteResult(
                name=suite.name,
                status=SuiteStatus.ERROR,
                tolerance=suite.tolerance,
                error=str(e),
            )

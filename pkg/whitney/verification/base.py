"""Base verification suite interface."""

from abc import ABC, abstractmethod
from typing import NamedTuple

import numpy as np

from whitney.errors import SkippedPointError
from whitney.logging_config import get_logger
from whitney.models.metric import MetricSignature, SignatureKind
from whitney.models.report import SuiteResult, SuiteStatus
from whitney.models.run_config import RunConfig

logger = get_logger(__name__)


class TrialOutcome(NamedTuple):
    """Worst residual of one trial and how many checks produced it."""

    residual: float
    checks: int
    skipped: int = 0
    label: str = ""


def relative(residual: float, scale: float) -> float:
    """Residual measured against max(1, |reference|)."""
    return residual / max(1.0, abs(scale))


class BaseSuite(ABC):
    """Base class for all property suites."""

    name: str = "base"
    description: str = "Base suite"
    tolerance: float = 1e-9
    max_trials: int | None = None  # cap on config.trials for expensive suites
    signature_kinds: tuple[SignatureKind, ...] | None = None  # None = every configured kind

    @abstractmethod
    def run_trial(self, rng: np.random.Generator, g: MetricSignature, points: int) -> TrialOutcome:
        """
        Run one randomized trial.

        Args:
            rng: Generator owned by this suite
            g: Metric signature of the trial
            points: Sample points per trial

        Returns:
            The trial's worst residual
        """
        pass

    def applies_to(self, config: RunConfig) -> bool:
        """Whether any configured signature family is one this suite covers."""
        if self.signature_kinds is None:
            return True
        return any(kind in self.signature_kinds for kind in config.signatures)

    def run(self, config: RunConfig, rng: np.random.Generator) -> SuiteResult:
        trials = config.trials if self.max_trials is None else min(config.trials, self.max_trials)
        worst, worst_case = 0.0, None
        total_checks = total_skipped = count = 0

        for dim in config.dims:
            for kind in config.signatures:
                if self.signature_kinds is not None and kind not in self.signature_kinds:
                    continue
                g = MetricSignature.from_kind(kind, dim)
                for trial in range(trials):
                    try:
                        outcome = self.run_trial(rng, g, config.points)
                    except SkippedPointError:
                        total_skipped += 1
                        continue
                    count += 1
                    total_checks += outcome.checks
                    total_skipped += outcome.skipped
                    if not np.isnan(worst) and (np.isnan(outcome.residual) or outcome.residual > worst):
                        worst = outcome.residual
                        worst_case = f"n={dim} g={g} trial={trial} {outcome.label}".strip()

        passed = bool(np.isfinite(worst)) and worst < self.tolerance and total_checks > 0
        logger.info(f"Suite {self.name}: max residual {worst:.3e} over {total_checks} checks")
        return SuiteResult(
            name=self.name,
            status=SuiteStatus.PASSED if passed else SuiteStatus.FAILED,
            max_residual=worst,
            tolerance=self.tolerance,
            trials=count,
            checks=total_checks,
            skipped=total_skipped,
            worst_case=worst_case,
        )

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}: {self.name}>"

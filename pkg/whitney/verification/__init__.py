"""Randomized property suites for Whitney forms and the exterior algebra."""

from .base import BaseSuite, TrialOutcome
from .closedness import ClosednessSuite, DecompositionSuite
from .hodge import HodgeIdentitySuite
from .normalization import NormalizationSuite
from .representation import (
    LorentzEquivarianceSuite,
    MetricIndependenceSuite,
    StructureSuite,
    TriRepresentationSuite,
)
from .runner import VerificationRunner, default_suites

__all__ = [
    "BaseSuite",
    "ClosednessSuite",
    "DecompositionSuite",
    "HodgeIdentitySuite",
    "LorentzEquivarianceSuite",
    "MetricIndependenceSuite",
    "NormalizationSuite",
    "StructureSuite",
    "TriRepresentationSuite",
    "TrialOutcome",
    "VerificationRunner",
    "default_suites",
]

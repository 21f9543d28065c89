"""Verification and simulation report models."""

from enum import StrEnum
from math import pi

from pydantic import BaseModel, Field

# Initial mode-1 amplitudes at or below this are treated as absent.
AMPLITUDE_FLOOR = 1e-12


class SuiteStatus(StrEnum):
    """Outcome of one verification suite."""

    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"  # the suite raised before finishing


class SuiteResult(BaseModel):
    """Worst residual of one property suite over all its trials."""

    name: str
    status: SuiteStatus
    max_residual: float = 0.0
    tolerance: float
    trials: int = 0
    checks: int = 0
    skipped: int = 0  # sample points rejected by a pointwise precondition
    worst_case: str | None = None  # configuration that produced max_residual
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == SuiteStatus.PASSED


class VerificationReport(BaseModel):
    """All suites run by one `verify` invocation."""

    seed: int
    dims: list[int]
    signatures: list[str]
    trials: int
    results: list[SuiteResult] = Field(default_factory=list)
    suites_run: list[str] = Field(default_factory=list)
    errors: list[str] = Field(default_factory=list)
    processing_time_ms: int | None = None

    @property
    def passed(self) -> bool:
        return not self.errors and all(r.passed for r in self.results)

    def failed_suites(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]


def wrap_phase(angle: float) -> float:
    """Map an angle to [-pi, pi)."""
    return (angle + pi) % (2 * pi) - pi


class SliceDiagnostics(BaseModel):
    """Error and fundamental Fourier mode of one time slice."""

    slice: int
    t: float
    l2_error: float
    mode1_amp: float
    mode1_phase: float
    exact_phase: float

    @property
    def phase_error(self) -> float:
        return wrap_phase(self.mode1_phase - self.exact_phase)


class Diagnostics(BaseModel):
    """Per-slice dispersion and dissipation measurements of a wave run."""

    slices: list[SliceDiagnostics] = Field(default_factory=list)

    def amplitude_drift(self) -> float:
        """Largest deviation of the mode-1 amplitude from its initial value.

        Relative to the initial amplitude, or absolute when the first slice has
        no mode-1 content.
        """
        if not self.slices:
            return 0.0
        start = self.slices[0].mode1_amp
        deviation = max(abs(s.mode1_amp - start) for s in self.slices)
        return deviation / start if start > AMPLITUDE_FLOOR else deviation

    def final_phase_error(self) -> float:
        return self.slices[-1].phase_error if self.slices else 0.0

    def final_l2_error(self) -> float:
        return self.slices[-1].l2_error if self.slices else 0.0

    def max_l2_error(self) -> float:
        return max((s.l2_error for s in self.slices), default=0.0)

"""Exception hierarchy for whitney-spacetime."""


class WhitneyError(Exception):
    """Base exception for all library errors."""

    pass


class AlgebraError(WhitneyError):
    """Invalid exterior algebra operation (grade overflow, variance mismatch)."""

    pass


class SimplexError(WhitneyError):
    """Invalid simplex construction or query."""

    pass


class DegenerateSimplexError(SimplexError):
    """Gram determinant vanishes within tolerance."""

    pass


class FormError(WhitneyError):
    """Invalid differential form operation."""

    pass


class SkippedPointError(FormError):
    """Sample point violates a pointwise precondition and must be skipped."""

    pass


class MeshError(WhitneyError):
    """Invalid spacetime mesh specification or construction."""

    pass


class SolverError(WhitneyError):
    """A slice system (or the global system) could not be solved."""

    def __init__(self, message: str, slice_index: int | None = None, condition: float | None = None):
        super().__init__(message)
        self.slice_index = slice_index
        self.condition = condition


class ExportError(WhitneyError):
    """Reading or writing a mesh, field or diagnostics file failed."""

    pass

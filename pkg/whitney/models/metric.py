"""Metric signature models."""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, model_validator

MAX_DIM = 6


class SignatureKind(StrEnum):
    """Named signature families used by the CLI and the verification suites."""

    EUCLID = "euclid"  # all +1
    LORENTZ = "lorentz"  # one -1 first, rest +1


class MetricSignature(BaseModel):
    """Diagonal pseudo-Riemannian metric: dimension plus one +1/-1 per axis."""

    model_config = ConfigDict(frozen=True)

    dim: int
    signs: tuple[int, ...]

    @model_validator(mode="after")
    def _check_signs(self) -> "MetricSignature":
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension must be between 1 and {MAX_DIM}, got {self.dim}")
        if len(self.signs) != self.dim:
            raise ValueError(f"expected {self.dim} signs, got {len(self.signs)}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1 or -1, got {self.signs}")
        return self

    def det_sign(self) -> int:
        """Product of the signs."""
        result = 1
        for s in self.signs:
            result *= s
        return result

    @property
    def is_lorentzian(self) -> bool:
        """Exactly one sign differs from the rest."""
        return self.dim > 1 and 1 in (self.signs.count(-1), self.signs.count(1))

    @classmethod
    def euclidean(cls, dim: int) -> "MetricSignature":
        return cls(dim=dim, signs=(1,) * dim)

    @classmethod
    def lorentzian(cls, dim: int) -> "MetricSignature":
        """Signature (-, +, ..., +) with the timelike axis first."""
        return cls(dim=dim, signs=(-1,) + (1,) * (dim - 1))

    @classmethod
    def from_kind(cls, kind: SignatureKind | str, dim: int) -> "MetricSignature":
        if SignatureKind(kind) == SignatureKind.LORENTZ:
            return cls.lorentzian(dim)
        return cls.euclidean(dim)

    def __str__(self) -> str:
        return "(" + ",".join("+" if s > 0 else "-" for s in self.signs) + ")"

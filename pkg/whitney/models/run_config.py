"""Validated configuration of one CLI invocation."""

from enum import StrEnum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from whitney.config import settings
from whitney.models.mesh import MeshSpec, MeshStyle, Pipeline
from whitney.models.metric import MAX_DIM, SignatureKind


class Command(StrEnum):
    VERIFY = "verify"
    WAVE = "wave"
    EXPORT_PLY = "export-ply"


class RunConfig(BaseModel):
    """Merged flags, JSON config file and settings defaults."""

    model_config = ConfigDict(extra="forbid")

    command: Command

    # verify
    dims: list[int] = Field(default_factory=settings.get_dims)
    signatures: list[SignatureKind] = Field(
        default_factory=lambda: _parse_signatures(settings.signature)
    )
    seed: int = settings.seed
    trials: int = Field(default=settings.trials, ge=1)
    points: int = Field(default=20, ge=1)
    threads: int = Field(default_factory=settings.get_threads, ge=1)

    # wave
    style: MeshStyle = MeshStyle.REGULAR
    nodes: int = Field(default=30, ge=3)
    slices: int | None = Field(default=None, ge=3)
    dx: float | None = Field(default=None, gt=0)
    dt: float | None = Field(default=None, gt=0)
    periods: float = Field(default=2.0, gt=0)
    pipeline: Pipeline = Pipeline.ABSTRACT
    out: Path = Path(settings.out_dir)

    # export-ply
    field: Path | None = None
    mesh: Path | None = None

    @field_validator("dims", mode="before")
    @classmethod
    def _parse_dims(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [int(x.strip()) for x in value.split(",") if x.strip()]
        return value

    @field_validator("dims")
    @classmethod
    def _check_dims(cls, value: list[int]) -> list[int]:
        if not value:
            raise ValueError("at least one dimension is required")
        if any(not 2 <= d <= MAX_DIM for d in value):
            raise ValueError(f"dimensions must be between 2 and {MAX_DIM}, got {value}")
        return value

    @field_validator("signatures", mode="before")
    @classmethod
    def _expand_signatures(cls, value: Any) -> Any:
        if isinstance(value, str):
            return _parse_signatures(value)
        return value

    def mesh_spec(self) -> MeshSpec:
        """Mesh resolution with dx, dt and slice count filled in from defaults."""
        dx = self.dx if self.dx is not None else settings.circumference / self.nodes
        if self.dt is not None:
            dt = self.dt
        else:
            dt = dx if self.style == MeshStyle.LIGHTCONE else settings.courant * dx
        slices = self.slices or round(self.periods * self.nodes * dx / dt) + 1
        return MeshSpec(
            nodes_per_slice=self.nodes,
            num_slices=max(slices, 3),
            dx=dx,
            dt=dt,
            style=self.style,
        )


def _parse_signatures(value: str) -> list[SignatureKind]:
    if value.strip().lower() == "both":
        return [SignatureKind.EUCLID, SignatureKind.LORENTZ]
    return [SignatureKind(part.strip().lower()) for part in value.split(",") if part.strip()]

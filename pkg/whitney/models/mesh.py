"""Spacetime mesh models."""

from enum import StrEnum
from math import isclose, pi
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from whitney.errors import MeshError


class MeshStyle(StrEnum):
    """How each quad between two slices is split into triangles."""

    REGULAR = "regular"  # every quad split along the same (i,k)-(i+1,k+1) diagonal
    LIGHTCONE = "lightcone"  # dt = dx, checkerboard diagonals, all null


class Pipeline(StrEnum):
    """Where element matrices get their metric data from."""

    ABSTRACT = "abstract"  # squared edge lengths only
    EMBEDDED = "embedded"  # unwrapped (t, x) coordinates


class ViolationCode(StrEnum):
    """Mesh invariant violations reported by validation."""

    MISSING_EDGE = "MISSING_EDGE"
    DEGENERATE_TRIANGLE = "DEGENERATE_TRIANGLE"
    NOT_LORENTZIAN = "NOT_LORENTZIAN"
    DEGENERATE_EDGE = "DEGENERATE_EDGE"
    SLICE_MEMBERSHIP = "SLICE_MEMBERSHIP"
    NON_ADJACENT_SLICES = "NON_ADJACENT_SLICES"
    PERIODICITY = "PERIODICITY"


class MeshViolation(BaseModel):
    """A single failed mesh invariant."""

    code: ViolationCode
    message: str
    evidence: dict[str, Any] | None = None


class MeshSpec(BaseModel):
    """Resolution and style of a cylinder mesh."""

    model_config = ConfigDict(extra="forbid")

    nodes_per_slice: int = Field(ge=3)
    num_slices: int = Field(ge=3)
    dx: float = Field(gt=0)
    dt: float = Field(gt=0)
    style: MeshStyle = MeshStyle.REGULAR

    @model_validator(mode="after")
    def _lightcone_steps(self) -> "MeshSpec":
        if self.style == MeshStyle.LIGHTCONE and not isclose(self.dt, self.dx, rel_tol=1e-12):
            raise ValueError(f"lightcone meshes need dt == dx, got dt={self.dt}, dx={self.dx}")
        return self

    @property
    def circumference(self) -> float:
        return self.nodes_per_slice * self.dx


class SpacetimeMesh(BaseModel):
    """Abstract simplicial cylinder with signed squared edge lengths.

    Node ids are k * N + i for spatial position i and slice k; the signature
    is (-, +) with time first, so timelike edges have negative squared length.
    """

    signature: tuple[int, int] = (-1, 1)
    nodes_per_slice: int
    num_slices: int
    dx: float
    dt: float
    style: MeshStyle = MeshStyle.REGULAR
    edges: list[tuple[int, int, float]]
    triangles: list[tuple[int, int, int]]
    slices: list[list[int]]

    _edge_map: dict[tuple[int, int], float] = PrivateAttr(default_factory=dict)
    _cache: dict[str, Any] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context: Any) -> None:
        for a, b, value in self.edges:
            self._edge_map[(min(a, b), max(a, b))] = value

    @property
    def num_nodes(self) -> int:
        return self.nodes_per_slice * self.num_slices

    @property
    def circumference(self) -> float:
        return self.nodes_per_slice * self.dx

    @property
    def spatial_period(self) -> int:
        """Smallest spatial shift mapping the mesh onto itself."""
        return 2 if self.style == MeshStyle.LIGHTCONE else 1

    @property
    def cache(self) -> dict[str, Any]:
        """Per-mesh memo for derived data (element matrices, assembled operators)."""
        return self._cache

    def node_id(self, i: int, k: int) -> int:
        return k * self.nodes_per_slice + i % self.nodes_per_slice

    def position(self, node: int) -> tuple[int, int]:
        """(i, k): spatial position and slice index of a node."""
        if not 0 <= node < self.num_nodes:
            raise MeshError(f"node {node} outside 0..{self.num_nodes - 1}")
        k, i = divmod(node, self.nodes_per_slice)
        return i, k

    def coordinates(self, node: int) -> tuple[float, float]:
        """(t, x) of a node in the unwrapped reference embedding."""
        i, k = self.position(node)
        return k * self.dt, i * self.dx

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self._edge_map

    def edge_sq_length(self, a: int, b: int) -> float:
        try:
            return self._edge_map[(min(a, b), max(a, b))]
        except KeyError:
            raise MeshError(f"edge ({a}, {b}) has no squared length") from None

    def triangle_edge_lengths(self, index: int) -> np.ndarray:
        """3 x 3 table of squared edge lengths in the triangle's vertex order."""
        tri = self.triangles[index]
        table = np.zeros((3, 3))
        for a in range(3):
            for b in range(a + 1, 3):
                table[a, b] = table[b, a] = self.edge_sq_length(tri[a], tri[b])
        return table

    def triangle_coordinates(self, index: int) -> np.ndarray:
        """(t, x) rows for a triangle, unwrapped across the periodic seam."""
        n = self.nodes_per_slice
        tri = self.triangles[index]
        base_i, _ = self.position(tri[0])
        rows = []
        for node in tri:
            i, k = self.position(node)
            shift = (i - base_i) % n
            if shift > n // 2:
                shift -= n
            rows.append((k * self.dt, (base_i + shift) * self.dx))
        return np.array(rows)

    def ring_coordinates(self, node: int) -> tuple[float, float, float]:
        """Node position on the visualization cylinder, time along the axis."""
        i, k = self.position(node)
        radius = self.circumference / (2 * pi)
        angle = 2 * pi * i / self.nodes_per_slice
        return radius * np.cos(angle), radius * np.sin(angle), k * self.dt

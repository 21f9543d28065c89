"""Oriented simplices with metric data from coordinates or squared edge lengths.

A simplex is either embedded (vertex coordinates in R^n plus a diagonal metric
signature) or abstract (a complete table of signed squared edge lengths).
Both modes share the Gram matrix of the edge vectors v_i - v_0, which is all
the wave integrator needs; coordinates are only required for the
representations that use flat and Hodge in ambient components.
"""

from collections.abc import Mapping, Sequence
from functools import cached_property
from itertools import combinations
from math import factorial, sqrt

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from whitney.algebra.multilinear import (
    KTensor,
    Variance,
    flat,
    hodge,
    inner,
    sort_sign,
    wedge_all,
)
from whitney.errors import DegenerateSimplexError, SimplexError
from whitney.models.metric import MetricSignature

DEGENERACY_TOLERANCE = 1e-12

EdgeLengths = Mapping[tuple[int, int], float] | np.ndarray | Sequence[Sequence[float]]


class SubsimplexRef(BaseModel):
    """Ordered list of local vertex indices of a simplex."""

    model_config = ConfigDict(frozen=True)

    indices: tuple[int, ...]

    @field_validator("indices")
    @classmethod
    def _distinct_non_negative(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if len(set(value)) != len(value):
            raise ValueError(f"duplicate vertex indices in {value}")
        if any(i < 0 for i in value):
            raise ValueError(f"negative vertex index in {value}")
        return value

    @classmethod
    def of(cls, *indices: int) -> "SubsimplexRef":
        return cls(indices=tuple(indices))

    @property
    def dim(self) -> int:
        return len(self.indices) - 1

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):  # type: ignore[override]
        return iter(self.indices)


class GramMatrix:
    """G_ij = <v_i - v_0, v_j - v_0> with its inverse, computed eagerly."""

    __slots__ = ("entries", "inverse", "det")

    def __init__(self, entries: np.ndarray | Sequence[Sequence[float]]) -> None:
        matrix = np.array(entries, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise SimplexError(f"Gram matrix must be square, got shape {matrix.shape}")
        if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12):
            raise SimplexError("Gram matrix must be symmetric")

        n = matrix.shape[0]
        det = float(np.linalg.det(matrix))
        scale = float(np.max(np.abs(matrix))) if matrix.size else 0.0
        if scale == 0.0 or abs(det) < DEGENERACY_TOLERANCE * scale**n:
            raise DegenerateSimplexError(
                f"Gram determinant {det:.3e} vanishes at entry scale {scale:.3e}"
            )

        inverse = np.linalg.inv(matrix)
        matrix.setflags(write=False)
        inverse.setflags(write=False)
        self.entries = matrix
        self.inverse = inverse
        self.det = det

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def edge_length_matrix(sq_lengths: EdgeLengths) -> np.ndarray:
    """Validate squared edge lengths and return them as a symmetric matrix.

    Accepts either a mapping (i, j) -> squared length over vertex ids 0..n or
    an (n+1) x (n+1) matrix.
    """
    if isinstance(sq_lengths, Mapping):
        vertices = sorted({i for edge in sq_lengths for i in edge})
        if vertices != list(range(len(vertices))):
            raise SimplexError(f"vertex ids must be 0..n, got {vertices}")
        size = len(vertices)
        matrix = np.full((size, size), np.nan)
        np.fill_diagonal(matrix, 0.0)
        for (i, j), value in sq_lengths.items():
            value = float(value)
            if i == j:
                if value != 0.0:
                    raise SimplexError(f"squared length of ({i}, {i}) must be zero, got {value}")
                continue
            for a, b in ((i, j), (j, i)):
                if not np.isnan(matrix[a, b]) and matrix[a, b] != value:
                    raise SimplexError(f"asymmetric squared lengths for edge ({i}, {j})")
                matrix[a, b] = value
        missing = [(int(i), int(j)) for i, j in zip(*np.nonzero(np.isnan(matrix))) if i < j]
        if missing:
            raise SimplexError(f"missing squared edge lengths for {missing}")
    else:
        matrix = np.array(sq_lengths, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise SimplexError(f"edge length matrix must be square, got shape {matrix.shape}")
        if not np.array_equal(matrix, matrix.T):
            raise SimplexError("edge length matrix must be symmetric")
        if np.any(np.diag(matrix) != 0.0):
            raise SimplexError("edge length matrix must vanish on the diagonal")

    if matrix.shape[0] < 2:
        raise SimplexError("a simplex needs at least two vertices")
    return matrix


def gram_from_edge_lengths(sq_lengths: EdgeLengths) -> GramMatrix:
    """Gram matrix of the edge vectors v_i - v_0 by polarization."""
    lengths = edge_length_matrix(sq_lengths)
    from_base = lengths[0, 1:]
    entries = (from_base[:, None] + from_base[None, :] - lengths[1:, 1:]) / 2.0
    return GramMatrix(entries)


class Simplex:
    """Oriented n-simplex; the stored vertex order is the orientation."""

    def __init__(
        self,
        *,
        vertices: np.ndarray | Sequence[Sequence[float]] | None = None,
        signature: MetricSignature | None = None,
        edge_sq_lengths: EdgeLengths | None = None,
    ) -> None:
        if (vertices is None) == (edge_sq_lengths is None):
            raise SimplexError(
                "a simplex is either embedded (vertices and signature) or abstract "
                "(squared edge lengths), exactly one of the two"
            )

        if vertices is not None:
            if signature is None:
                raise SimplexError("embedded simplices need a metric signature")
            coords = np.array(vertices, dtype=float)
            if coords.ndim != 2 or coords.shape[0] != coords.shape[1] + 1:
                raise SimplexError(
                    f"an embedded n-simplex needs n+1 points in R^n, got shape {coords.shape}"
                )
            if signature.dim != coords.shape[1]:
                raise SimplexError(
                    f"signature dimension {signature.dim} does not match ambient "
                    f"dimension {coords.shape[1]}"
                )
            signs = np.array(signature.signs, dtype=float)
            edges = coords[1:] - coords[0]
            gram = GramMatrix(edges @ np.diag(signs) @ edges.T)
            diff = coords[:, None, :] - coords[None, :, :]
            lengths = np.einsum("ijk,k,ijk->ij", diff, signs, diff)
            coords.setflags(write=False)
        else:
            lengths = edge_length_matrix(edge_sq_lengths)  # type: ignore[arg-type]
            gram = gram_from_edge_lengths(lengths)
            coords = None

        lengths.setflags(write=False)
        self.vertices = coords
        self.signature = signature if coords is not None else None
        self.edge_sq_lengths = lengths
        self.gram = gram
        self.n = lengths.shape[0] - 1

    @classmethod
    def embedded(
        cls, vertices: np.ndarray | Sequence[Sequence[float]], signature: MetricSignature
    ) -> "Simplex":
        return cls(vertices=vertices, signature=signature)

    @classmethod
    def abstract(cls, edge_sq_lengths: EdgeLengths) -> "Simplex":
        return cls(edge_sq_lengths=edge_sq_lengths)

    @property
    def is_embedded(self) -> bool:
        return self.vertices is not None

    def require_embedded(self, operation: str) -> None:
        if self.vertices is None:
            raise SimplexError(f"{operation} needs an embedded simplex")

    def edge_vectors(self) -> np.ndarray:
        """Rows v_i - v_0 for i = 1..n."""
        self.require_embedded("edge vectors")
        assert self.vertices is not None
        return self.vertices[1:] - self.vertices[0]

    def edge_sq_length(self, i: int, j: int) -> float:
        return float(self.edge_sq_lengths[i, j])

    def to_abstract(self) -> "Simplex":
        """Abstract twin built from this simplex's squared edge lengths."""
        return Simplex.abstract(np.array(self.edge_sq_lengths))

    def centroid(self) -> np.ndarray:
        self.require_embedded("centroid")
        assert self.vertices is not None
        return self.vertices.mean(axis=0)

    @cached_property
    def volume(self) -> tuple[KTensor | None, float]:
        return _volume_form(self)

    @cached_property
    def volume_multivector(self) -> tuple[KTensor, float]:
        """Vector-valued (1/n!) ^_i (v_i - v_0) and its self inner product."""
        self.require_embedded("volume multivector")
        assert self.signature is not None
        vol = wedge_all((KTensor.vector(e) for e in self.edge_vectors()), self.n, Variance.VECTOR)
        vol = vol / factorial(self.n)
        return vol, inner(vol, vol, self.signature)

    @cached_property
    def barycentric_differentials(self) -> tuple[KTensor, ...]:
        return tuple(_d_lambda(self))

    @cached_property
    def barycentric_inverse(self) -> np.ndarray:
        """Inverse of the affine system mapping barycentric coordinates to points."""
        self.require_embedded("barycentric coordinates")
        assert self.vertices is not None
        system = np.vstack([np.ones(self.n + 1), self.vertices.T])
        inverse = np.linalg.inv(system)
        inverse.setflags(write=False)
        return inverse

    def __repr__(self) -> str:
        mode = "embedded" if self.is_embedded else "abstract"
        return f"<Simplex n={self.n} {mode} det(G)={self.gram.det:.4g}>"


def volume_form(simplex: Simplex) -> tuple[KTensor | None, float]:
    """vol(sigma) and *vol(sigma); computed once per simplex."""
    return simplex.volume


def _volume_form(simplex: Simplex) -> tuple[KTensor | None, float]:
    """vol(sigma) = (1/n!) ^_i (v_i - v_0)^flat and the scalar *vol(sigma).

    Abstract simplices only carry *vol(sigma) = sqrt(|det G|)/n!, positive for
    the stored vertex order.
    """
    n = simplex.n
    if not simplex.is_embedded:
        return None, sqrt(abs(simplex.gram.det)) / factorial(n)

    g = simplex.signature
    assert g is not None
    edges = [flat(KTensor.vector(e), g) for e in simplex.edge_vectors()]
    form = wedge_all(edges, n) / factorial(n)
    return form, hodge(form, g).value


def barycentric(simplex: Simplex, x: Sequence[float] | np.ndarray) -> np.ndarray:
    """Barycentric coordinates of the point x (summing to one)."""
    simplex.require_embedded("barycentric coordinates")
    assert simplex.vertices is not None
    point = np.asarray(x, dtype=float)
    if point.shape != (simplex.n,):
        raise SimplexError(f"point must have {simplex.n} components, got shape {point.shape}")
    return simplex.barycentric_inverse @ np.concatenate([[1.0], point])


def d_lambda(simplex: Simplex) -> list[KTensor]:
    """Differentials d lambda_0 .. d lambda_n as covectors."""
    return list(simplex.barycentric_differentials)


def _d_lambda(simplex: Simplex) -> list[KTensor]:
    simplex.require_embedded("barycentric differentials")
    rows = np.linalg.inv(simplex.edge_vectors()).T
    first = -rows.sum(axis=0)
    return [KTensor.covector(first)] + [KTensor.covector(row) for row in rows]


def d_lambda_table(simplex: Simplex) -> np.ndarray:
    """Inner products <d lambda_a, d lambda_b> for a, b = 0..n.

    Embedded simplices contract the covectors with the inverse metric;
    abstract simplices use the inverse Gram matrix.
    """
    n = simplex.n
    if simplex.is_embedded:
        g = simplex.signature
        assert g is not None
        covectors = d_lambda(simplex)
        return np.array([[inner(a, b, g) for b in covectors] for a in covectors])

    lift = np.vstack([-np.ones(n), np.eye(n)])
    return lift @ simplex.gram.inverse @ lift.T


def _simplex_dim(simplex: "Simplex | int") -> int:
    return simplex if isinstance(simplex, int) else simplex.n


def as_subsimplex(rho: SubsimplexRef | Sequence[int], n: int) -> SubsimplexRef:
    """Coerce `rho` to a SubsimplexRef whose indices fit an n-simplex."""
    if not isinstance(rho, SubsimplexRef):
        try:
            rho = SubsimplexRef(indices=tuple(int(i) for i in rho))
        except ValidationError as e:
            raise SimplexError(f"invalid subsimplex {tuple(rho)}: {e.errors()[0]['msg']}") from e
    if any(i > n for i in rho.indices):
        raise SimplexError(f"subsimplex {rho.indices} has indices outside 0..{n}")
    return rho


def complement(rho: SubsimplexRef | Sequence[int], simplex: "Simplex | int") -> SubsimplexRef:
    """The ordered complement tau = sigma minus rho, in increasing index order."""
    n = _simplex_dim(simplex)
    ref = as_subsimplex(rho, n)
    present = set(ref.indices)
    return SubsimplexRef(indices=tuple(i for i in range(n + 1) if i not in present))


def perm_sign(
    rho: SubsimplexRef | Sequence[int],
    simplex: "Simplex | int",
    complement_order: Sequence[int] | None = None,
) -> int:
    """Sign of rho followed by tau as a permutation of the simplex's vertex order.

    tau defaults to the increasing complement; an explicit ordering of the
    same vertex set may be given instead.
    """
    n = _simplex_dim(simplex)
    ref = as_subsimplex(rho, n)
    tau = complement(ref, n).indices
    if complement_order is not None:
        if sorted(complement_order) != list(tau):
            raise SimplexError(f"{tuple(complement_order)} is not an ordering of the complement {tau}")
        tau = tuple(complement_order)
    return sort_sign(ref.indices + tau)


def faces(simplex: "Simplex | int", dim: int) -> list[SubsimplexRef]:
    """All dim-dimensional faces with increasing vertex order."""
    n = _simplex_dim(simplex)
    if not 0 <= dim <= n:
        raise SimplexError(f"face dimension {dim} out of range for an {n}-simplex")
    return [SubsimplexRef(indices=c) for c in combinations(range(n + 1), dim + 1)]

"""Cylinder mesh builders, validation and JSON persistence."""

from collections import Counter
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from whitney.errors import DegenerateSimplexError, ExportError, MeshError
from whitney.geometry.simplex import Simplex
from whitney.logging_config import get_logger
from whitney.models.mesh import (
    MeshSpec,
    MeshStyle,
    MeshViolation,
    SpacetimeMesh,
    ViolationCode,
)
from whitney.models.metric import MetricSignature

logger = get_logger(__name__)

LORENTZ_2D = MetricSignature.lorentzian(2)


def _assemble(
    spec: MeshSpec, triangles: list[tuple[int, int, int]], sq_length
) -> SpacetimeMesh:
    n, m = spec.nodes_per_slice, spec.num_slices
    edges: dict[tuple[int, int], float] = {}
    for tri in triangles:
        for a, b in ((tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])):
            key = (min(a, b), max(a, b))
            if key not in edges:
                edges[key] = sq_length(*key)
    slices = [[k * n + i for i in range(n)] for k in range(m)]
    return SpacetimeMesh(
        nodes_per_slice=n,
        num_slices=m,
        dx=spec.dx,
        dt=spec.dt,
        style=spec.style,
        edges=[(a, b, value) for (a, b), value in sorted(edges.items())],
        triangles=triangles,
        slices=slices,
    )


def _sq_length_fn(spec: MeshSpec):
    """Signed squared length -dt^2 + dx^2 of the straight edge between two grid nodes."""
    n = spec.nodes_per_slice

    def sq_length(a: int, b: int) -> float:
        ka, ia = divmod(a, n)
        kb, ib = divmod(b, n)
        di = (ib - ia) % n
        if di > n // 2:
            di -= n
        return (di * spec.dx) ** 2 - ((kb - ka) * spec.dt) ** 2

    return sq_length


def build_cylinder_mesh(spec: MeshSpec) -> SpacetimeMesh:
    """Regular mesh: every quad split along its (i,k)-(i+1,k+1) diagonal."""
    if spec.style != MeshStyle.REGULAR:
        raise MeshError(f"build_cylinder_mesh builds regular meshes, got style {spec.style}")
    if spec.dt == spec.dx:
        logger.warning("dt == dx on a regular mesh: diagonal edges are null")

    n, m = spec.nodes_per_slice, spec.num_slices
    triangles: list[tuple[int, int, int]] = []
    for k in range(m - 1):
        for i in range(n):
            here, right = k * n + i, k * n + (i + 1) % n
            up, up_right = here + n, right + n
            triangles.append((here, right, up_right))
            triangles.append((here, up_right, up))

    mesh = _assemble(spec, triangles, _sq_length_fn(spec))
    logger.debug(f"Built regular mesh: {mesh.num_nodes} nodes, {len(triangles)} triangles")
    return mesh


def build_lightcone_mesh(spec: MeshSpec) -> SpacetimeMesh:
    """Light-cone aligned mesh with dt = dx.

    Quads alternate between the two null diagonals in a checkerboard, so every
    diagonal edge has squared length zero and every triangle has one null, one
    spacelike and one timelike edge.
    """
    if not np.isclose(spec.dt, spec.dx, rtol=1e-12, atol=0.0):
        raise MeshError(f"lightcone meshes need dt == dx, got dt={spec.dt}, dx={spec.dx}")
    if spec.nodes_per_slice % 2:
        raise MeshError(f"lightcone meshes need an even slice size, got {spec.nodes_per_slice}")
    if spec.style != MeshStyle.LIGHTCONE:
        spec = spec.model_copy(update={"style": MeshStyle.LIGHTCONE})

    n, m = spec.nodes_per_slice, spec.num_slices
    triangles: list[tuple[int, int, int]] = []
    for k in range(m - 1):
        for i in range(n):
            here, right = k * n + i, k * n + (i + 1) % n
            up, up_right = here + n, right + n
            if (i + k) % 2 == 0:
                triangles.append((here, right, up_right))
                triangles.append((here, up_right, up))
            else:
                triangles.append((here, right, up))
                triangles.append((right, up_right, up))

    mesh = _assemble(spec, triangles, _sq_length_fn(spec))
    logger.debug(f"Built lightcone mesh: {mesh.num_nodes} nodes, {len(triangles)} triangles")
    return mesh


def build_mesh(spec: MeshSpec) -> SpacetimeMesh:
    if spec.style == MeshStyle.LIGHTCONE:
        return build_lightcone_mesh(spec)
    return build_cylinder_mesh(spec)


def triangle_simplex(mesh: SpacetimeMesh, index: int, embedded: bool = False) -> Simplex:
    """The triangle as an abstract simplex, or embedded with unwrapped (t, x) coordinates."""
    if embedded:
        return Simplex.embedded(mesh.triangle_coordinates(index), LORENTZ_2D)
    return Simplex.abstract(mesh.triangle_edge_lengths(index))


def _shift(mesh: SpacetimeMesh, node: int, by: int) -> int:
    i, k = mesh.position(node)
    return mesh.node_id(i + by, k)


def _canonical(tri: tuple[int, ...]) -> tuple[int, ...]:
    """Rotation of an oriented triangle starting at its smallest node."""
    start = tri.index(min(tri))
    return tri[start:] + tri[:start]


def validate(mesh: SpacetimeMesh) -> list[MeshViolation]:
    """Check the mesh invariants; an empty list means the mesh is valid."""
    violations: list[MeshViolation] = []
    n = mesh.nodes_per_slice

    membership = Counter(node for layer in mesh.slices for node in layer)
    expected = set(range(mesh.num_nodes))
    stray = sorted(set(membership) - expected)
    repeated = sorted(node for node, count in membership.items() if count > 1)
    orphaned = sorted(expected - set(membership))
    if len(mesh.slices) != mesh.num_slices or stray or repeated or orphaned:
        violations.append(
            MeshViolation(
                code=ViolationCode.SLICE_MEMBERSHIP,
                message="every node must belong to exactly one slice",
                evidence={
                    "slices": len(mesh.slices),
                    "stray": stray[:10],
                    "repeated": repeated[:10],
                    "orphaned": orphaned[:10],
                },
            )
        )
    slice_of = {node: k for k, layer in enumerate(mesh.slices) for node in layer}

    for index, tri in enumerate(mesh.triangles):
        missing = [
            (a, b)
            for a, b in ((tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2]))
            if not mesh.has_edge(a, b)
        ]
        if missing:
            violations.append(
                MeshViolation(
                    code=ViolationCode.MISSING_EDGE,
                    message=f"triangle {index} references edges without squared lengths",
                    evidence={"triangle": list(tri), "edges": missing},
                )
            )
            continue

        layers = {slice_of.get(node) for node in tri}
        if None in layers or max(layers) - min(layers) > 1:  # type: ignore[type-var,operator]
            violations.append(
                MeshViolation(
                    code=ViolationCode.NON_ADJACENT_SLICES,
                    message=f"triangle {index} does not connect adjacent slices",
                    evidence={"triangle": list(tri), "slices": sorted(map(str, layers))},
                )
            )

        try:
            det = triangle_simplex(mesh, index).gram.det
        except DegenerateSimplexError as e:
            violations.append(
                MeshViolation(
                    code=ViolationCode.DEGENERATE_TRIANGLE,
                    message=f"triangle {index} is degenerate: {e}",
                    evidence={"triangle": list(tri)},
                )
            )
            continue
        if det >= 0:
            violations.append(
                MeshViolation(
                    code=ViolationCode.NOT_LORENTZIAN,
                    message=f"triangle {index} has a non-Lorentzian Gram matrix",
                    evidence={"triangle": list(tri), "det": det},
                )
            )

    for a, b, value in mesh.edges:
        same_slice = slice_of.get(a) is not None and slice_of.get(a) == slice_of.get(b)
        vertical = (a - b) % n == 0 and not same_slice
        if (same_slice and value <= 0) or (vertical and value >= 0):
            kind = "spacelike" if same_slice else "timelike"
            violations.append(
                MeshViolation(
                    code=ViolationCode.DEGENERATE_EDGE,
                    message=f"edge ({a}, {b}) is not {kind}",
                    evidence={"edge": [a, b], "sq_length": value},
                )
            )

    in_range = all(0 <= v < mesh.num_nodes for tri in mesh.triangles for v in tri) and all(
        0 <= v < mesh.num_nodes for a, b, _ in mesh.edges for v in (a, b)
    )
    if n % mesh.spatial_period == 0 and in_range:
        period = mesh.spatial_period
        triangle_set = {_canonical(tri) for tri in mesh.triangles}
        shifted = {_canonical(tuple(_shift(mesh, v, period) for v in tri)) for tri in mesh.triangles}
        mismatched_edges = [
            (a, b)
            for a, b, value in mesh.edges
            if mesh.has_edge(_shift(mesh, a, period), _shift(mesh, b, period))
            and mesh.edge_sq_length(_shift(mesh, a, period), _shift(mesh, b, period)) != value
        ]
        if shifted != triangle_set or mismatched_edges:
            violations.append(
                MeshViolation(
                    code=ViolationCode.PERIODICITY,
                    message=f"mesh is not invariant under a spatial shift by {period}",
                    evidence={
                        "triangles_moved": len(shifted - triangle_set),
                        "edges_changed": mismatched_edges[:10],
                    },
                )
            )

    if violations:
        logger.info(f"Mesh validation found {len(violations)} violations")
    return violations


def save_mesh_json(mesh: SpacetimeMesh, path: str | Path) -> Path:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(mesh.model_dump_json(indent=1), encoding="utf-8")
    except OSError as e:
        raise ExportError(f"cannot write mesh to {target}: {e}") from e
    return target


def load_mesh_json(path: str | Path) -> SpacetimeMesh:
    source = Path(path)
    try:
        return SpacetimeMesh.model_validate_json(source.read_text(encoding="utf-8"))
    except OSError as e:
        raise ExportError(f"cannot read mesh from {source}: {e}") from e
    except ValidationError as e:
        raise MeshError(f"invalid mesh file {source}: {e.error_count()} validation errors") from e

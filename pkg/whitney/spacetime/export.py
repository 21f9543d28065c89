"""Field and mesh exports: ASCII PLY on the visualization cylinder and field CSV."""

import csv
from pathlib import Path
from typing import NamedTuple

import numpy as np

from whitney.config import settings
from whitney.errors import ExportError
from whitney.logging_config import get_logger
from whitney.models.mesh import SpacetimeMesh
from whitney.spacetime.wave import DiscreteField, exact_solution

logger = get_logger(__name__)

FIELD_COLUMNS = ["slice_index", "node_index", "t", "x", "value", "exact_value", "abs_error"]


class PlyMesh(NamedTuple):
    """Contents of an ASCII PLY file with x y z quality vertices and triangle faces."""

    vertices: np.ndarray
    quality: np.ndarray
    faces: np.ndarray
    comments: list[str]


def _check_field(field: DiscreteField, mesh: SpacetimeMesh) -> None:
    if len(field) != mesh.num_nodes or field.nodes_per_slice != mesh.nodes_per_slice:
        raise ExportError(
            f"field with {len(field)} values ({field.nodes_per_slice} per slice) does not match "
            f"mesh with {mesh.num_nodes} nodes ({mesh.nodes_per_slice} per slice)"
        )


def export_ply(
    mesh: SpacetimeMesh,
    field: DiscreteField,
    path: str | Path,
    radial_scale: float | None = None,
) -> Path:
    """Write the mesh on a cylinder of radius N dx / 2 pi with time along the axis.

    Each vertex is pushed outward by radial_scale * value relative to the
    radius and carries the field value as its `quality` property.
    """
    _check_field(field, mesh)
    scale = settings.ply_radial_scale if radial_scale is None else radial_scale
    target = Path(path)

    lines = [
        "ply",
        "format ascii 1.0",
        "comment signature -1 1 (time first), z is time",
        f"comment nodes_per_slice {mesh.nodes_per_slice} num_slices {mesh.num_slices}",
        f"element vertex {mesh.num_nodes}",
        "property float x",
        "property float y",
        "property float z",
        "property float quality",
        f"element face {len(mesh.triangles)}",
        "property list uchar int vertex_indices",
        "end_header",
    ]
    for node in range(mesh.num_nodes):
        value = field[node]
        x, y, z = mesh.ring_coordinates(node)
        stretch = 1.0 + scale * value
        lines.append(f"{float(x * stretch)!r} {float(y * stretch)!r} {float(z)!r} {value!r}")
    lines.extend(f"3 {a} {b} {c}" for a, b, c in mesh.triangles)

    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text("\n".join(lines) + "\n", encoding="ascii")
    except OSError as e:
        raise ExportError(f"cannot write PLY to {target}: {e}") from e
    logger.info(f"Wrote PLY {target}: {mesh.num_nodes} vertices, {len(mesh.triangles)} faces")
    return target


def read_ply(path: str | Path) -> PlyMesh:
    """Parse an ASCII PLY file written by `export_ply` (or any x y z [quality] triangle file)."""
    source = Path(path)
    try:
        lines = source.read_text(encoding="ascii").splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise ExportError(f"cannot read PLY from {source}: {e}") from e

    if not lines or lines[0].strip() != "ply":
        raise ExportError(f"{source} is not a PLY file")
    counts: dict[str, int] = {}
    properties: list[str] = []
    comments: list[str] = []
    element = None
    body_start = None
    for number, line in enumerate(lines[1:], start=1):
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "format" and parts[1:2] != ["ascii"]:
            raise ExportError(f"{source}: only ASCII PLY is supported, got {line!r}")
        if parts[0] == "comment":
            comments.append(line[len("comment ") :])
        elif parts[0] == "element":
            element = parts[1]
            counts[element] = int(parts[2])
        elif parts[0] == "property" and element == "vertex":
            properties.append(parts[-1])
        elif parts[0] == "end_header":
            body_start = number + 1
            break
    if body_start is None:
        raise ExportError(f"{source}: header has no end_header line")

    num_vertices = counts.get("vertex", 0)
    num_faces = counts.get("face", 0)
    body = lines[body_start:]
    if len(body) < num_vertices + num_faces:
        raise ExportError(
            f"{source}: expected {num_vertices} vertices and {num_faces} faces, "
            f"found {len(body)} data lines"
        )
    try:
        table = np.array([[float(v) for v in row.split()] for row in body[:num_vertices]])
        faces = np.array(
            [[int(v) for v in row.split()] for row in body[num_vertices : num_vertices + num_faces]]
        )
    except ValueError as e:
        raise ExportError(f"{source}: malformed data line: {e}") from e

    table = table.reshape(num_vertices, len(properties))
    faces = faces.reshape(num_faces, -1) if num_faces else np.zeros((0, 4), dtype=int)
    if num_faces and np.any(faces[:, 0] != faces.shape[1] - 1):
        raise ExportError(f"{source}: face vertex counts do not match their index lists")
    columns = {name: i for i, name in enumerate(properties)}
    vertices = table[:, [columns["x"], columns["y"], columns["z"]]]
    quality = table[:, columns["quality"]] if "quality" in columns else np.zeros(num_vertices)
    return PlyMesh(vertices=vertices, quality=quality, faces=faces[:, 1:], comments=comments)


def export_csv(field: DiscreteField, mesh: SpacetimeMesh, path: str | Path) -> Path:
    """Field table with one row per node and the exact solution alongside."""
    _check_field(field, mesh)
    target = Path(path)
    length = mesh.circumference
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(FIELD_COLUMNS)
            for node in range(mesh.num_nodes):
                i, k = mesh.position(node)
                t, x = mesh.coordinates(node)
                value = field[node]
                exact = float(exact_solution(x, t, length))
                writer.writerow([k, i, repr(t), repr(x), repr(value), repr(exact), repr(abs(value - exact))])
    except OSError as e:
        raise ExportError(f"cannot write field CSV to {target}: {e}") from e
    logger.info(f"Wrote field CSV {target}: {mesh.num_nodes} rows")
    return target


def read_field_csv(path: str | Path) -> DiscreteField:
    """Reload the `value` column of a field CSV, ordered by slice and spatial index."""
    source = Path(path)
    try:
        with source.open(newline="", encoding="utf-8") as handle:
            reader = csv.DictReader(handle)
            missing = set(FIELD_COLUMNS[:5]) - set(reader.fieldnames or [])
            if missing:
                raise ExportError(f"{source}: missing columns {sorted(missing)}")
            entries = {
                (int(row["slice_index"]), int(row["node_index"])): float(row["value"])
                for row in reader
            }
    except OSError as e:
        raise ExportError(f"cannot read field CSV from {source}: {e}") from e
    except ValueError as e:
        raise ExportError(f"{source}: malformed row: {e}") from e

    if not entries:
        raise ExportError(f"{source} holds no field values")
    num_slices = max(k for k, _ in entries) + 1
    nodes_per_slice = max(i for _, i in entries) + 1
    if len(entries) != num_slices * nodes_per_slice:
        raise ExportError(
            f"{source}: {len(entries)} rows do not cover {num_slices} slices of "
            f"{nodes_per_slice} nodes"
        )
    values = [entries[(k, i)] for k in range(num_slices) for i in range(nodes_per_slice)]
    return DiscreteField(values, nodes_per_slice)

"""Tests for PLY and CSV exports."""

import math

import numpy as np
import pytest

from whitney.errors import ExportError
from whitney.spacetime.export import FIELD_COLUMNS, export_csv, export_ply, read_field_csv, read_ply
from whitney.spacetime.wave import DiscreteField, exact_field


@pytest.fixture
def wave_field(small_mesh):
    return exact_field(small_mesh)


class TestPly:
    """Tests for the ASCII PLY writer and reader."""

    def test_header_counts(self, small_mesh, wave_field, tmp_path):
        """Header declares every node and triangle."""
        path = export_ply(small_mesh, wave_field, tmp_path / "field.ply")
        header = path.read_text().split("end_header")[0]
        assert "element vertex 12" in header
        assert "element face 16" in header
        assert "property float quality" in header
        assert "property list uchar int vertex_indices" in header

    def test_zero_field_on_cylinder(self, small_mesh, tmp_path):
        """A zero field leaves every vertex on the cylinder of radius N dx / 2 pi."""
        zero = DiscreteField(np.zeros(12), 4)
        ply = read_ply(export_ply(small_mesh, zero, tmp_path / "zero.ply"))
        radius = np.hypot(ply.vertices[:, 0], ply.vertices[:, 1])
        np.testing.assert_allclose(radius, 4.0 / (2 * math.pi))
        np.testing.assert_allclose(ply.vertices[:, 2], np.repeat([0.0, 0.5, 1.0], 4))

    def test_round_trip(self, small_mesh, wave_field, tmp_path):
        """Faces and per-vertex values survive a write and read."""
        ply = read_ply(export_ply(small_mesh, wave_field, tmp_path / "field.ply"))
        np.testing.assert_array_equal(ply.faces, np.array(small_mesh.triangles))
        np.testing.assert_array_equal(ply.quality, wave_field.values)

    def test_radial_displacement(self, small_mesh, tmp_path):
        """A unit field pushes vertices out by the radial scale."""
        ones = DiscreteField(np.ones(12), 4)
        ply = read_ply(export_ply(small_mesh, ones, tmp_path / "ones.ply", radial_scale=0.5))
        radius = np.hypot(ply.vertices[:, 0], ply.vertices[:, 1])
        np.testing.assert_allclose(radius, 1.5 * 4.0 / (2 * math.pi))

    def test_field_mismatch(self, small_mesh, tmp_path):
        """The field must match the mesh size."""
        with pytest.raises(ExportError):
            export_ply(small_mesh, DiscreteField(np.zeros(8), 4), tmp_path / "bad.ply")

    def test_not_a_ply(self, tmp_path):
        """Files without the ply magic line are rejected."""
        path = tmp_path / "bad.ply"
        path.write_text("solid cube\n")
        with pytest.raises(ExportError):
            read_ply(path)


class TestFieldCsv:
    """Tests for the field table."""

    def test_rows_and_columns(self, small_mesh, wave_field, tmp_path):
        """One header plus one row per node."""
        lines = export_csv(wave_field, small_mesh, tmp_path / "field.csv").read_text().splitlines()
        assert lines[0].split(",") == FIELD_COLUMNS
        assert len(lines) == 12 + 1

    def test_exact_column(self, small_mesh, wave_field, tmp_path):
        """The exact field has zero error in every row."""
        lines = export_csv(wave_field, small_mesh, tmp_path / "field.csv").read_text().splitlines()
        for line in lines[1:]:
            assert float(line.split(",")[-1]) == 0.0

    def test_reload(self, small_mesh, wave_field, tmp_path):
        """Values reload bit for bit."""
        path = export_csv(wave_field, small_mesh, tmp_path / "field.csv")
        loaded = read_field_csv(path)
        assert loaded.nodes_per_slice == 4
        np.testing.assert_array_equal(loaded.values, wave_field.values)

    def test_empty_file(self, tmp_path):
        """An empty file is an ExportError."""
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(ExportError):
            read_field_csv(path)

    def test_header_only(self, tmp_path):
        """A header without rows holds no field."""
        path = tmp_path / "header.csv"
        path.write_text(",".join(FIELD_COLUMNS) + "\n")
        with pytest.raises(ExportError):
            read_field_csv(path)

    def test_incomplete_grid(self, small_mesh, wave_field, tmp_path):
        """Dropped rows are detected."""
        path = export_csv(wave_field, small_mesh, tmp_path / "field.csv")
        lines = path.read_text().splitlines()
        path.write_text("\n".join(lines[:-1]) + "\n")
        with pytest.raises(ExportError):
            read_field_csv(path)

"""Tests for cylinder mesh construction, validation and persistence."""

import logging

import numpy as np
import pytest
from pydantic import ValidationError

from whitney.errors import MeshError
from whitney.geometry.simplex import d_lambda_table
from whitney.models.mesh import MeshSpec, MeshStyle, SpacetimeMesh, ViolationCode
from whitney.spacetime.mesh import (
    build_cylinder_mesh,
    build_lightcone_mesh,
    build_mesh,
    load_mesh_json,
    save_mesh_json,
    triangle_simplex,
    validate,
)


def with_edges(mesh: SpacetimeMesh, edges) -> SpacetimeMesh:
    return SpacetimeMesh.model_validate({**mesh.model_dump(), "edges": edges})


def codes(mesh: SpacetimeMesh) -> set[ViolationCode]:
    return {violation.code for violation in validate(mesh)}


class TestRegularMesh:
    """Tests for the regular cylinder mesh."""

    def test_counts(self, small_mesh):
        """4 x 3 nodes give 16 triangles and 12 + 8 + 8 + 8 edges."""
        assert small_mesh.num_nodes == 12
        assert len(small_mesh.triangles) == 16
        assert len(small_mesh.edges) == 12 + 8 + 8
        assert [len(layer) for layer in small_mesh.slices] == [4, 4, 4]

    def test_euler_characteristic(self, small_mesh):
        """A cylinder has V - E + F = 0."""
        mesh = small_mesh
        assert mesh.num_nodes - len(mesh.edges) + len(mesh.triangles) == 0

    def test_edge_lengths(self, small_mesh):
        """Spacelike dx^2, timelike -dt^2 and diagonal dx^2 - dt^2."""
        assert small_mesh.edge_sq_length(0, 1) == pytest.approx(1.0)
        assert small_mesh.edge_sq_length(0, 4) == pytest.approx(-0.25)
        assert small_mesh.edge_sq_length(0, 5) == pytest.approx(0.75)
        assert small_mesh.edge_sq_length(3, 0) == pytest.approx(1.0)

    def test_missing_edge_lookup(self, small_mesh):
        """Nodes two slices apart share no edge."""
        with pytest.raises(MeshError):
            small_mesh.edge_sq_length(0, 8)

    def test_valid(self, small_mesh):
        """The constructed mesh satisfies every invariant."""
        assert validate(small_mesh) == []

    def test_triangles_lorentzian(self, small_mesh):
        """Every triangle has a negative Gram determinant."""
        for index in range(len(small_mesh.triangles)):
            assert triangle_simplex(small_mesh, index).gram.det < 0

    def test_abstract_matches_embedded(self, small_mesh):
        """Edge lengths and unwrapped coordinates give the same d lambda tables."""
        for index in range(len(small_mesh.triangles)):
            abstract = d_lambda_table(triangle_simplex(small_mesh, index))
            embedded = d_lambda_table(triangle_simplex(small_mesh, index, embedded=True))
            np.testing.assert_allclose(abstract, embedded, atol=1e-10)

    def test_seam_coordinates(self, small_mesh):
        """Triangles across the seam are unwrapped to neighbouring x values."""
        index = small_mesh.triangles.index((3, 0, 4))
        np.testing.assert_allclose(
            small_mesh.triangle_coordinates(index), [[0.0, 3.0], [0.0, 4.0], [0.5, 4.0]]
        )

    def test_null_diagonal_warning(self, caplog):
        """dt == dx on a regular mesh is allowed with a warning."""
        with caplog.at_level(logging.WARNING):
            mesh = build_cylinder_mesh(MeshSpec(nodes_per_slice=4, num_slices=3, dx=1.0, dt=1.0))
        assert "null" in caplog.text
        assert validate(mesh) == []

    def test_spec_bounds(self):
        """Fewer than three nodes or slices is rejected."""
        with pytest.raises(ValidationError):
            MeshSpec(nodes_per_slice=2, num_slices=3, dx=1.0, dt=0.5)
        with pytest.raises(ValidationError):
            MeshSpec(nodes_per_slice=4, num_slices=3, dx=1.0, dt=0.0)


class TestLightconeMesh:
    """Tests for the light-cone aligned mesh."""

    def test_diagonals_null(self, lightcone_mesh):
        """Every edge between slices that is not vertical has zero length."""
        n = lightcone_mesh.nodes_per_slice
        for a, b, value in lightcone_mesh.edges:
            if b - a != n and a // n != b // n:
                assert value == 0.0

    def test_valid(self, lightcone_mesh):
        """The mesh validates, including its period-2 shift symmetry."""
        assert lightcone_mesh.spatial_period == 2
        assert validate(lightcone_mesh) == []

    def test_gram_determinants(self, lightcone_mesh):
        """Every triangle has det G = -dx^4."""
        for index in range(len(lightcone_mesh.triangles)):
            det = triangle_simplex(lightcone_mesh, index).gram.det
            assert det == pytest.approx(-(0.25**4))

    def test_needs_equal_steps(self):
        """dt != dx is rejected for lightcone meshes."""
        with pytest.raises(ValidationError):
            MeshSpec(nodes_per_slice=4, num_slices=3, dx=0.25, dt=0.2, style=MeshStyle.LIGHTCONE)
        with pytest.raises(MeshError):
            build_lightcone_mesh(MeshSpec(nodes_per_slice=4, num_slices=3, dx=0.25, dt=0.2))

    def test_needs_even_slices(self):
        """An odd slice size cannot carry the checkerboard."""
        spec = MeshSpec(nodes_per_slice=5, num_slices=3, dx=0.2, dt=0.2, style=MeshStyle.LIGHTCONE)
        with pytest.raises(MeshError):
            build_lightcone_mesh(spec)

    def test_build_mesh_dispatch(self):
        """build_mesh follows the style."""
        spec = MeshSpec(nodes_per_slice=6, num_slices=3, dx=0.5, dt=0.5, style=MeshStyle.LIGHTCONE)
        assert build_mesh(spec).style == MeshStyle.LIGHTCONE


class TestValidation:
    """Tests for mesh invariant violations."""

    def test_spacelike_edge_made_timelike(self, small_mesh):
        """A negative in-slice edge is reported."""
        edges = [(a, b, -1.0 if (a, b) == (0, 1) else v) for a, b, v in small_mesh.edges]
        assert ViolationCode.DEGENERATE_EDGE in codes(with_edges(small_mesh, edges))

    def test_missing_edge(self, small_mesh):
        """Triangles need all three edges."""
        edges = [edge for edge in small_mesh.edges if edge[:2] != (0, 1)]
        assert ViolationCode.MISSING_EDGE in codes(with_edges(small_mesh, edges))

    def test_euclidean_triangle(self, small_mesh):
        """A triangle with only spacelike edges is not Lorentzian."""
        edges = [(a, b, 1.0 if (a, b) in {(0, 5), (0, 4)} else v) for a, b, v in small_mesh.edges]
        found = codes(with_edges(small_mesh, edges))
        assert ViolationCode.NOT_LORENTZIAN in found
        assert ViolationCode.DEGENERATE_EDGE in found

    def test_collinear_triangle(self, small_mesh):
        """Lengths of three collinear points are degenerate."""
        edges = [(a, b, 4.0 if (a, b) == (0, 5) else v) for a, b, v in small_mesh.edges]
        edges = [(a, b, 1.0 if (a, b) == (0, 4) else v) for a, b, v in edges]
        edges = [(a, b, 1.0 if (a, b) == (4, 5) else v) for a, b, v in edges]
        assert ViolationCode.DEGENERATE_TRIANGLE in codes(with_edges(small_mesh, edges))

    def test_broken_periodicity(self, small_mesh):
        """Reversing one triangle breaks the shift symmetry."""
        data = small_mesh.model_dump()
        a, b, c = data["triangles"][0]
        data["triangles"][0] = (a, c, b)
        assert codes(SpacetimeMesh.model_validate(data)) == {ViolationCode.PERIODICITY}

    def test_slice_membership(self, small_mesh):
        """Every node belongs to exactly one slice."""
        data = small_mesh.model_dump()
        data["slices"][2] = data["slices"][2][:-1]
        assert ViolationCode.SLICE_MEMBERSHIP in codes(SpacetimeMesh.model_validate(data))

    def test_non_adjacent_slices(self, small_mesh):
        """Triangles cannot skip a slice."""
        data = small_mesh.model_dump()
        data["triangles"].append((0, 1, 8))
        data["edges"].extend([(0, 8, -1.0), (1, 8, 0.0)])
        assert ViolationCode.NON_ADJACENT_SLICES in codes(SpacetimeMesh.model_validate(data))


class TestPersistence:
    """Tests for mesh JSON files."""

    def test_round_trip(self, small_mesh, tmp_path):
        """A saved mesh loads back with the same data."""
        path = save_mesh_json(small_mesh, tmp_path / "mesh.json")
        loaded = load_mesh_json(path)
        assert loaded.model_dump() == small_mesh.model_dump()
        assert loaded.edge_sq_length(0, 4) == pytest.approx(-0.25)

    def test_invalid_file(self, tmp_path):
        """A JSON document that is not a mesh is a MeshError."""
        path = tmp_path / "mesh.json"
        path.write_text('{"nodes_per_slice": 4}')
        with pytest.raises(MeshError):
            load_mesh_json(path)

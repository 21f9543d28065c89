"""Test configuration and shared fixtures."""

import numpy as np
import pytest

from whitney.geometry.simplex import Simplex
from whitney.models.mesh import MeshSpec, MeshStyle
from whitney.models.metric import MetricSignature
from whitney.spacetime.mesh import build_cylinder_mesh, build_lightcone_mesh


@pytest.fixture
def euclid2():
    return MetricSignature.euclidean(2)


@pytest.fixture
def lorentz2():
    return MetricSignature.lorentzian(2)


@pytest.fixture
def unit_triangle(euclid2):
    """Euclidean triangle (0,0), (1,0), (0,1)."""
    return Simplex.embedded([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]], euclid2)


@pytest.fixture
def unit_tetrahedron():
    """Euclidean tetrahedron at the origin with unit legs."""
    vertices = np.vstack([np.zeros(3), np.eye(3)])
    return Simplex.embedded(vertices, MetricSignature.euclidean(3))


@pytest.fixture
def lorentz_pentachoron():
    """Sheared 4-simplex in signature (-, +, +, +)."""
    vertices = [
        [0.0, 0.0, 0.0, 0.0],
        [1.0, 0.2, 0.0, 0.0],
        [0.1, 1.0, 0.0, 0.0],
        [0.0, 0.3, 1.0, 0.0],
        [0.2, 0.0, 0.1, 1.0],
    ]
    return Simplex.embedded(vertices, MetricSignature.lorentzian(4))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def small_mesh():
    """Regular mesh with 4 nodes per slice, 3 slices, dx = 1, dt = 1/2."""
    return build_cylinder_mesh(MeshSpec(nodes_per_slice=4, num_slices=3, dx=1.0, dt=0.5))


@pytest.fixture
def lightcone_mesh():
    """Light-cone mesh with 4 nodes per slice and 3 slices."""
    spec = MeshSpec(nodes_per_slice=4, num_slices=3, dx=0.25, dt=0.25, style=MeshStyle.LIGHTCONE)
    return build_lightcone_mesh(spec)

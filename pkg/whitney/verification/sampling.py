"""Random simplices, points and tensors for the property suites."""

from math import comb

import numpy as np

from whitney.algebra.multilinear import KTensor, Variance, wedge_all
from whitney.errors import DegenerateSimplexError, SimplexError
from whitney.geometry.simplex import Simplex
from whitney.models.metric import MetricSignature

MIN_GRAM_DET = 1e-3
MAX_ATTEMPTS = 1000


def random_vertices(rng: np.random.Generator, dim: int) -> np.ndarray:
    """dim + 1 points uniform in [-1, 1]^dim whose Gram determinant is bounded away from zero."""
    for _ in range(MAX_ATTEMPTS):
        vertices = rng.uniform(-1.0, 1.0, size=(dim + 1, dim))
        edges = vertices[1:] - vertices[0]
        # |det G| = det(E)^2 for every diagonal signature
        if np.linalg.det(edges) ** 2 >= MIN_GRAM_DET:
            return vertices
    raise SimplexError(f"no well-conditioned {dim}-simplex after {MAX_ATTEMPTS} attempts")


def random_simplex(rng: np.random.Generator, g: MetricSignature) -> Simplex:
    for _ in range(MAX_ATTEMPTS):
        try:
            return Simplex.embedded(random_vertices(rng, g.dim), g)
        except DegenerateSimplexError:
            continue
    raise SimplexError(f"no non-degenerate simplex for signature {g}")


def interior_point(rng: np.random.Generator, simplex: Simplex) -> np.ndarray:
    """Point with barycentric coordinates drawn from a flat Dirichlet distribution."""
    assert simplex.vertices is not None
    weights = rng.dirichlet(np.ones(simplex.n + 1))
    return weights @ simplex.vertices


def affine_point(rng: np.random.Generator, points: np.ndarray) -> np.ndarray:
    """Random affine combination (weights summing to one, any sign) of the given points."""
    weights = rng.uniform(-1.0, 2.0, size=len(points))
    weights[-1] = 1.0 - weights[:-1].sum()
    return weights @ points


def random_rho(rng: np.random.Generator, n: int, j: int) -> tuple[int, ...]:
    """j + 1 distinct vertices of an n-simplex in random order."""
    return tuple(int(i) for i in rng.permutation(n + 1)[: j + 1])


def random_ktensor(
    rng: np.random.Generator, dim: int, grade: int, variance: Variance = Variance.COVECTOR
) -> KTensor:
    return KTensor(dim, grade, variance, rng.uniform(-1.0, 1.0, size=comb(dim, grade)))


def random_factors(rng: np.random.Generator, dim: int, count: int) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, size=(count, dim))


def decomposable(factors: np.ndarray, dim: int, variance: Variance = Variance.VECTOR) -> KTensor:
    """Wedge of the rows of `factors`."""
    return wedge_all((KTensor(dim, 1, variance, row) for row in factors), dim, variance)

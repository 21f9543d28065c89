"""Quadrature on the standard simplex."""

from functools import cache
from math import factorial, sqrt

import numpy as np


@cache
def simplex_rule(dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Degree-2 exact rule on the standard dim-simplex.

    Returns barycentric points with shape (dim + 1, dim + 1) and weights that
    sum to the simplex volume 1/dim!. A 0-simplex gets a single unit point.
    """
    if dim < 0:
        raise ValueError(f"simplex dimension must be non-negative, got {dim}")
    if dim == 0:
        return np.ones((1, 1)), np.ones(1)

    root = sqrt(dim + 2)
    r = (dim + 2 - root) / ((dim + 2) * (dim + 1))
    s = (dim + 2 + dim * root) / ((dim + 2) * (dim + 1))
    points = np.full((dim + 1, dim + 1), r)
    np.fill_diagonal(points, s)
    weights = np.full(dim + 1, 1.0 / (factorial(dim) * (dim + 1)))
    points.setflags(write=False)
    weights.setflags(write=False)
    return points, weights

"""Simplex geometry: Gram data, barycentric coordinates, volumes, quadrature."""

from whitney.geometry.quadrature import simplex_rule
from whitney.geometry.simplex import (
    GramMatrix,
    Simplex,
    SubsimplexRef,
    as_subsimplex,
    barycentric,
    complement,
    d_lambda,
    d_lambda_table,
    edge_length_matrix,
    faces,
    gram_from_edge_lengths,
    perm_sign,
    volume_form,
)

__all__ = [
    "GramMatrix",
    "Simplex",
    "SubsimplexRef",
    "barycentric",
    "as_subsimplex",
    "complement",
    "d_lambda",
    "d_lambda_table",
    "edge_length_matrix",
    "faces",
    "gram_from_edge_lengths",
    "perm_sign",
    "simplex_rule",
    "volume_form",
]

"""Exterior algebra over flat pseudo-Riemannian spaces."""

from .multilinear import (
    HodgeSide,
    KTensor,
    Variance,
    VolumeElement,
    blades,
    boost,
    contract,
    contraction_identity_check,
    flat,
    hodge,
    inner,
    inner_contraction_check,
    pairing,
    sharp,
    sort_sign,
    star_star_sign,
    volume_element,
    wedge,
    wedge_all,
)

__all__ = [
    "HodgeSide",
    "KTensor",
    "Variance",
    "VolumeElement",
    "blades",
    "boost",
    "contract",
    "contraction_identity_check",
    "flat",
    "hodge",
    "inner",
    "inner_contraction_check",
    "pairing",
    "sharp",
    "sort_sign",
    "star_star_sign",
    "volume_element",
    "wedge",
    "wedge_all",
]

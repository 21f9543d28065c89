"""Integration of form fields over oriented faces of a simplex."""

from collections.abc import Sequence

from whitney.algebra.multilinear import KTensor, Variance, pairing, wedge_all
from whitney.errors import FormError
from whitney.forms.whitney import FormField
from whitney.geometry.quadrature import simplex_rule
from whitney.geometry.simplex import Simplex, SubsimplexRef, as_subsimplex


def integrate_over_subsimplex(
    field: FormField,
    face: SubsimplexRef | Sequence[int],
    simplex: Simplex | None = None,
) -> float:
    """Integrate a j-form over the j-face spanned by `face`, in the face's vertex order.

    The face is parametrized affinely from the standard simplex, so the pullback
    is the form evaluated on the wedge of the face edge vectors.
    """
    domain = simplex or field.domain
    if domain is None:
        raise FormError("integration needs a simplex, either given or carried by the field")
    domain.require_embedded("integration over a face")
    assert domain.vertices is not None

    ref = as_subsimplex(face, domain.n)
    if not ref.indices:
        raise FormError("cannot integrate over an empty face")
    if field.grade != ref.dim:
        raise FormError(f"cannot integrate a {field.grade}-form over a {ref.dim}-face")

    corners = domain.vertices[list(ref.indices)]
    tangent = wedge_all(
        (KTensor.vector(c - corners[0]) for c in corners[1:]), domain.n, Variance.VECTOR
    )
    points, weights = simplex_rule(ref.dim)
    return float(
        sum(weight * pairing(field(bary @ corners), tangent) for bary, weight in zip(points, weights))
    )

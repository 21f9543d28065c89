"""Exterior derivative and codifferential of form fields by central differences."""

import numpy as np

from whitney.algebra.multilinear import KTensor, hodge, wedge
from whitney.config import settings
from whitney.errors import FormError
from whitney.forms.whitney import FormField
from whitney.models.metric import MetricSignature


def exterior_derivative_fd(
    field: FormField, x: np.ndarray | list[float], h: float | None = None
) -> KTensor:
    """d(field) at x: sum over m of dx^m ^ (central difference of field along axis m)."""
    step = settings.fd_step if h is None else h
    if step <= 0:
        raise FormError(f"finite difference step must be positive, got {step}")
    n = field.dim
    if field.grade >= n:
        raise FormError(f"the derivative of a grade-{field.grade} form in dimension {n} vanishes identically")

    point = np.asarray(x, dtype=float)
    result = KTensor.zero(n, field.grade + 1)
    for m in range(n):
        offset = np.zeros(n)
        offset[m] = step
        partial = (field(point + offset) - field(point - offset)) / (2.0 * step)
        result = result + wedge(KTensor.basis(n, (m,)), partial)
    return result


def codifferential_fd(
    field: FormField,
    x: np.ndarray | list[float],
    h: float | None = None,
    signature: MetricSignature | None = None,
) -> KTensor:
    """delta = (-1)^(nk+n+1) * d * on a k-form, k >= 1."""
    g = signature or field.signature
    if g is None:
        raise FormError("the codifferential needs a metric signature")
    k = field.grade
    if k == 0:
        raise FormError("the codifferential of a 0-form is not defined")
    n = field.dim

    starred = FormField(lambda y: hodge(field(y), g), n - k, n, g)
    derivative = exterior_derivative_fd(starred, x, h)
    return hodge(derivative, g) * (-1) ** (n * k + n + 1)

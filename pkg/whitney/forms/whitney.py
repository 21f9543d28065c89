"""Whitney j-forms on an embedded simplex.

Three equivalent evaluations are provided: the barycentric sum over rho, the
coordinate-free covector built from the complement tau, and the action on a
j-vector through the simplex volume multivector. All of them are affine in the
evaluation point.
"""

from collections.abc import Callable, Sequence
from math import factorial

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from whitney.algebra.multilinear import (
    HodgeSide,
    KTensor,
    Variance,
    flat,
    hodge,
    inner,
    sharp,
    star_star_sign,
    wedge,
    wedge_all,
)
from whitney.errors import FormError, SkippedPointError
from whitney.geometry.simplex import (
    Simplex,
    SubsimplexRef,
    as_subsimplex,
    barycentric,
    complement,
    d_lambda,
    perm_sign,
    volume_form,
)
from whitney.models.metric import MetricSignature

BARYCENTRIC_ZERO = 1e-12


class WhitneyDescriptor(BaseModel):
    """The Whitney form over the ordered vertex list rho of a simplex."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    simplex: Simplex
    rho: SubsimplexRef
    complement_order: tuple[int, ...] | None = None  # ordering of tau, increasing if None

    @model_validator(mode="after")
    def _check_rho(self) -> "WhitneyDescriptor":
        n = self.simplex.n
        if not self.rho.indices:
            raise ValueError("rho needs at least one vertex")
        if any(i > n for i in self.rho.indices):
            raise ValueError(f"rho {self.rho.indices} has indices outside 0..{n}")
        if self.complement_order is not None:
            expected = complement(self.rho, n).indices
            if tuple(sorted(self.complement_order)) != expected:
                raise ValueError(
                    f"{self.complement_order} is not an ordering of the complement {expected}"
                )
        return self

    @classmethod
    def of(
        cls,
        simplex: Simplex,
        rho: SubsimplexRef | Sequence[int],
        complement_order: Sequence[int] | None = None,
    ) -> "WhitneyDescriptor":
        try:
            return cls(
                simplex=simplex,
                rho=as_subsimplex(rho, simplex.n),
                complement_order=None if complement_order is None else tuple(complement_order),
            )
        except ValidationError as e:
            raise FormError(f"invalid Whitney form: {e.errors()[0]['msg']}") from e

    @property
    def j(self) -> int:
        return self.rho.dim

    @property
    def n(self) -> int:
        return self.simplex.n

    @property
    def tau(self) -> tuple[int, ...]:
        if self.complement_order is not None:
            return self.complement_order
        return complement(self.rho, self.simplex.n).indices

    @property
    def sign(self) -> int:
        return perm_sign(self.rho, self.simplex, self.complement_order)

    def swapped(self, a: int = 0, b: int = 1) -> "WhitneyDescriptor":
        """Same form with positions a and b of rho exchanged."""
        indices = list(self.rho.indices)
        indices[a], indices[b] = indices[b], indices[a]
        return WhitneyDescriptor.of(self.simplex, indices, self.complement_order)


class FormField:
    """A differential form realized as a pointwise evaluator."""

    __slots__ = ("evaluator", "grade", "dim", "signature", "domain")

    def __init__(
        self,
        evaluator: Callable[[np.ndarray], KTensor],
        grade: int,
        dim: int,
        signature: MetricSignature | None = None,
        domain: Simplex | None = None,
    ) -> None:
        self.evaluator = evaluator
        self.grade = grade
        self.dim = dim
        self.signature = signature
        self.domain = domain

    def __call__(self, x: Sequence[float] | np.ndarray) -> KTensor:
        value = self.evaluator(np.asarray(x, dtype=float))
        if value.grade != self.grade or value.dim != self.dim:
            raise FormError(
                f"evaluator returned grade {value.grade} in dimension {value.dim}, "
                f"expected grade {self.grade} in dimension {self.dim}"
            )
        return value

    @classmethod
    def constant(cls, value: KTensor, signature: MetricSignature | None = None) -> "FormField":
        return cls(lambda _x: value, value.grade, value.dim, signature)


def _embedded(w: WhitneyDescriptor) -> tuple[Simplex, np.ndarray, MetricSignature]:
    w.simplex.require_embedded("Whitney form evaluation")
    assert w.simplex.vertices is not None and w.simplex.signature is not None
    return w.simplex, w.simplex.vertices, w.simplex.signature


def _point(x: Sequence[float] | np.ndarray, n: int) -> np.ndarray:
    point = np.asarray(x, dtype=float)
    if point.shape != (n,):
        raise FormError(f"evaluation point must have {n} components, got shape {point.shape}")
    return point


def _scale(w: WhitneyDescriptor, star_vol: float) -> float:
    return w.sign * factorial(w.j) / factorial(w.n) / star_vol


def eval_barycentric(w: WhitneyDescriptor, x: Sequence[float] | np.ndarray) -> KTensor:
    """j! sum_i (-1)^i lambda_i dlambda_0 ^ .. (omit i) .. ^ dlambda_j over rho."""
    simplex, _, _ = _embedded(w)
    n = simplex.n
    lam = barycentric(simplex, _point(x, n))
    dl = d_lambda(simplex)
    rho = w.rho.indices

    total = KTensor.zero(n, w.j)
    for i, vertex in enumerate(rho):
        term = wedge_all((dl[r] for pos, r in enumerate(rho) if pos != i), n) * lam[vertex]
        total = total - term if i % 2 else total + term
    return total * factorial(w.j)


def _complement_blade(
    w: WhitneyDescriptor, vertices: np.ndarray, x: np.ndarray, g: MetricSignature
) -> KTensor:
    return wedge_all((flat(KTensor.vector(vertices[k] - x), g) for k in w.tau), w.n)


def eval_covector(w: WhitneyDescriptor, x: Sequence[float] | np.ndarray) -> KTensor:
    """sgn(rho u tau) / *vol * j!/n! * star of the wedge of (v_k - x)^flat over tau."""
    simplex, vertices, g = _embedded(w)
    point = _point(x, simplex.n)
    _, star_vol = volume_form(simplex)
    blade = _complement_blade(w, vertices, point, g)
    return hodge(blade, g, side=HodgeSide.RIGHT) * _scale(w, star_vol)


def eval_vector(w: WhitneyDescriptor, x: Sequence[float] | np.ndarray, u: KTensor) -> float:
    """Action of the form on the j-vector U via the simplex volume multivector.

    Computes sgn * j!/n! * <Vol, U ^ V_tau> / <Vol, Vol> with V_tau the wedge of
    (v_k - x) over tau. U stands first; V_tau ^ U differs by (-1)^(j(n-j)).
    """
    simplex, vertices, g = _embedded(w)
    point = _point(x, simplex.n)
    if u.variance is not Variance.VECTOR or u.grade != w.j or u.dim != simplex.n:
        raise FormError(
            f"expected a grade-{w.j} vector in dimension {simplex.n}, "
            f"got grade {u.grade} {u.variance} in dimension {u.dim}"
        )

    n = simplex.n
    vol, vol_sq = simplex.volume_multivector
    v_tau = wedge_all((KTensor.vector(vertices[k] - point) for k in w.tau), n, Variance.VECTOR)
    ratio = inner(vol, wedge(u, v_tau), g) / vol_sq
    return w.sign * factorial(w.j) / factorial(n) * ratio


def hodge_dual_whitney(w: WhitneyDescriptor, x: Sequence[float] | np.ndarray) -> KTensor:
    """Closed form of the Hodge dual: (**) sgn / *vol * j!/n! * wedge of (v_k - x)^flat.

    Agrees with the right-sided star of `eval_covector`.
    """
    simplex, vertices, g = _embedded(w)
    point = _point(x, simplex.n)
    _, star_vol = volume_form(simplex)
    blade = _complement_blade(w, vertices, point, g)
    return blade * (star_star_sign(g, w.j) * _scale(w, star_vol))


def wedge_expansion_eval(w: WhitneyDescriptor, x: Sequence[float] | np.ndarray) -> KTensor:
    """`eval_covector` with the complement wedge expanded to first order in x.

    The wedge of (v_k - x)^flat over tau equals the constant wedge of v_k^flat
    minus x^flat wedged with the alternating sum of the wedges omitting one v_k.
    """
    simplex, vertices, g = _embedded(w)
    n = simplex.n
    point = _point(x, n)
    _, star_vol = volume_form(simplex)

    factors = [flat(KTensor.vector(vertices[k]), g) for k in w.tau]
    blade = wedge_all(factors, n)
    if factors:
        omitted = KTensor.zero(n, len(factors) - 1)
        for pos in range(len(factors)):
            term = wedge_all(factors[:pos] + factors[pos + 1 :], n)
            omitted = omitted - term if pos % 2 else omitted + term
        blade = blade - wedge(flat(KTensor.vector(point), g), omitted)
    return hodge(blade, g, side=HodgeSide.RIGHT) * _scale(w, star_vol)


def vector_proxy(value: KTensor, g: MetricSignature) -> np.ndarray:
    """Vector field components of a 1-form (sharp) or an (n-1)-form (sharp of its star)."""
    if value.variance is not Variance.COVECTOR:
        raise FormError("vector proxies are defined for covector-valued forms")
    if value.grade == 1:
        return sharp(value, g).coeffs.copy()
    if value.grade == value.dim - 1:
        return sharp(hodge(value, g), g).coeffs.copy()
    raise FormError(f"no vector proxy for a grade-{value.grade} form in dimension {value.dim}")


def decomposition_check(
    simplex: Simplex, rho: SubsimplexRef | Sequence[int], x: Sequence[float] | np.ndarray
) -> float:
    """Residual of (l+1) w[v0..vl] ^ w[vl, vl+1] / w[vl] = w[v0..vl+1] at x.

    Raises SkippedPointError where the barycentric coordinate of v_l vanishes.
    """
    indices = as_subsimplex(rho, simplex.n).indices
    if len(indices) < 2:
        raise FormError("decomposition needs at least two vertices")
    level = len(indices) - 2
    pivot = eval_barycentric(WhitneyDescriptor.of(simplex, indices[level : level + 1]), x).value
    if abs(pivot) < BARYCENTRIC_ZERO:
        raise SkippedPointError(f"barycentric coordinate of vertex {indices[level]} vanishes at x")

    head = eval_barycentric(WhitneyDescriptor.of(simplex, indices[: level + 1]), x)
    link = eval_barycentric(WhitneyDescriptor.of(simplex, indices[level:]), x)
    full = eval_barycentric(WhitneyDescriptor.of(simplex, indices), x)
    return (wedge(head, link) * ((level + 1) / pivot) - full).norm_inf()


EVALUATORS: dict[str, Callable[[WhitneyDescriptor, np.ndarray], KTensor]] = {
    "barycentric": eval_barycentric,
    "covector": eval_covector,
    "expansion": wedge_expansion_eval,
}


def whitney_field(w: WhitneyDescriptor, representation: str = "covector") -> FormField:
    """The Whitney form as a FormField using one of the pointwise representations."""
    try:
        evaluate = EVALUATORS[representation]
    except KeyError:
        raise FormError(
            f"unknown representation {representation!r}, expected one of {sorted(EVALUATORS)}"
        ) from None
    return FormField(lambda x: evaluate(w, x), w.j, w.n, w.simplex.signature, w.simplex)


def hodge_dual_field(w: WhitneyDescriptor) -> FormField:
    return FormField(
        lambda x: hodge_dual_whitney(w, x), w.n - w.j, w.n, w.simplex.signature, w.simplex
    )

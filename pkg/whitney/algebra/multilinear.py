"""Dense exterior algebra over a flat space with a diagonal metric.

Grade-k tensors are stored as dense coefficient vectors indexed by the
lexicographically sorted k-subsets of {0, ..., n-1}. All operations are pure
functions; sign bookkeeping tables are cached per (dimension, grade).
"""

from collections.abc import Iterable, Iterator, Sequence
from enum import StrEnum
from functools import cache, reduce
from itertools import combinations
from math import comb
from typing import NamedTuple

import numpy as np

from whitney.errors import AlgebraError
from whitney.models.metric import MAX_DIM, MetricSignature


class Variance(StrEnum):
    """Whether a tensor lives in the exterior algebra of V or of V*."""

    VECTOR = "vector"
    COVECTOR = "covector"

    @property
    def dual(self) -> "Variance":
        return Variance.COVECTOR if self is Variance.VECTOR else Variance.VECTOR


class HodgeSide(StrEnum):
    """Slots of the volume element the argument of the Hodge star occupies."""

    LEFT = "left"  # u ^ *w = <u, w> Vol
    RIGHT = "right"  # *w ^ u = <u, w> Vol


@cache
def blades(dim: int, grade: int) -> tuple[tuple[int, ...], ...]:
    """Sorted index subsets of size `grade`, in coefficient order."""
    return tuple(combinations(range(dim), grade))


@cache
def blade_index(dim: int, grade: int) -> dict[tuple[int, ...], int]:
    return {blade: i for i, blade in enumerate(blades(dim, grade))}


def sort_sign(indices: Sequence[int]) -> int:
    """Parity of the permutation sorting `indices`; 0 when an index repeats."""
    if len(set(indices)) != len(indices):
        return 0
    inversions = sum(1 for a, b in combinations(indices, 2) if a > b)
    return -1 if inversions % 2 else 1


def complement(blade: Sequence[int], dim: int) -> tuple[int, ...]:
    """Indices of {0..dim-1} not in `blade`, increasing."""
    present = set(blade)
    return tuple(i for i in range(dim) if i not in present)


class KTensor:
    """Grade-k alternating tensor, vector- or covector-valued."""

    __slots__ = ("dim", "grade", "variance", "coeffs")

    def __init__(
        self,
        dim: int,
        grade: int,
        variance: Variance | str = Variance.COVECTOR,
        coeffs: Iterable[float] | np.ndarray | float | None = None,
    ) -> None:
        if not 1 <= dim <= MAX_DIM:
            raise AlgebraError(f"dimension must be between 1 and {MAX_DIM}, got {dim}")
        if not 0 <= grade <= dim:
            raise AlgebraError(f"grade {grade} out of range for dimension {dim}")

        size = comb(dim, grade)
        if coeffs is None:
            values = np.zeros(size)
        else:
            values = np.array(coeffs, dtype=float)
            if values.ndim == 0:
                values = values.reshape(1)
        if values.shape != (size,):
            raise AlgebraError(
                f"grade-{grade} tensor in dimension {dim} needs {size} coefficients, "
                f"got shape {values.shape}"
            )
        values.setflags(write=False)

        self.dim = dim
        self.grade = grade
        self.variance = Variance(variance)
        self.coeffs = values

    @classmethod
    def zero(cls, dim: int, grade: int, variance: Variance | str = Variance.COVECTOR) -> "KTensor":
        return cls(dim, grade, variance)

    @classmethod
    def scalar(
        cls, dim: int, value: float, variance: Variance | str = Variance.COVECTOR
    ) -> "KTensor":
        return cls(dim, 0, variance, [value])

    @classmethod
    def basis(
        cls,
        dim: int,
        blade: Sequence[int],
        variance: Variance | str = Variance.COVECTOR,
        coeff: float = 1.0,
    ) -> "KTensor":
        """The blade e_{i1} ^ ... ^ e_{ik} in the given (possibly unsorted) order."""
        grade = len(blade)
        if grade > dim:
            raise AlgebraError(f"blade {tuple(blade)} too long for dimension {dim}")
        if any(not 0 <= i < dim for i in blade):
            raise AlgebraError(f"blade {tuple(blade)} has indices outside 0..{dim - 1}")
        tensor = np.zeros(comb(dim, grade))
        sign = sort_sign(blade)
        if sign:
            tensor[blade_index(dim, grade)[tuple(sorted(blade))]] = sign * coeff
        return cls(dim, grade, variance, tensor)

    @classmethod
    def vector(cls, components: Sequence[float] | np.ndarray) -> "KTensor":
        components = np.asarray(components, dtype=float)
        return cls(len(components), 1, Variance.VECTOR, components)

    @classmethod
    def covector(cls, components: Sequence[float] | np.ndarray) -> "KTensor":
        components = np.asarray(components, dtype=float)
        return cls(len(components), 1, Variance.COVECTOR, components)

    @property
    def value(self) -> float:
        """The single coefficient of a grade-0 tensor."""
        if self.grade != 0:
            raise AlgebraError(f"value is only defined for grade 0, not grade {self.grade}")
        return float(self.coeffs[0])

    def items(self) -> Iterator[tuple[tuple[int, ...], float]]:
        return zip(blades(self.dim, self.grade), (float(c) for c in self.coeffs))

    def norm_inf(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def allclose(self, other: "KTensor", atol: float = 1e-12) -> bool:
        self._check_compatible(other)
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=0.0, atol=atol))

    def _check_compatible(self, other: "KTensor") -> None:
        if (self.dim, self.grade, self.variance) != (other.dim, other.grade, other.variance):
            raise AlgebraError(
                f"incompatible tensors: ({self.dim}, {self.grade}, {self.variance}) vs "
                f"({other.dim}, {other.grade}, {other.variance})"
            )

    def _with(self, coeffs: np.ndarray) -> "KTensor":
        return KTensor(self.dim, self.grade, self.variance, coeffs)

    def __add__(self, other: "KTensor") -> "KTensor":
        self._check_compatible(other)
        return self._with(self.coeffs + other.coeffs)

    def __sub__(self, other: "KTensor") -> "KTensor":
        self._check_compatible(other)
        return self._with(self.coeffs - other.coeffs)

    def __neg__(self) -> "KTensor":
        return self._with(-self.coeffs)

    def __mul__(self, factor: float) -> "KTensor":
        return self._with(self.coeffs * float(factor))

    __rmul__ = __mul__

    def __truediv__(self, divisor: float) -> "KTensor":
        return self._with(self.coeffs / float(divisor))

    def __repr__(self) -> str:
        terms = [
            f"{c:+.6g}*{'e' if self.variance is Variance.VECTOR else 'e^'}{''.join(map(str, b))}"
            for b, c in self.items()
            if c != 0.0
        ]
        body = " ".join(terms) if terms else "0"
        return f"<KTensor {self.variance} grade={self.grade} dim={self.dim}: {body}>"


class VolumeElement(NamedTuple):
    """Vol = e^0 ^ ... ^ e^{n-1} together with <Vol, Vol>."""

    form: KTensor
    self_inner: int


def volume_element(g: MetricSignature) -> VolumeElement:
    form = KTensor.basis(g.dim, tuple(range(g.dim)), Variance.COVECTOR)
    return VolumeElement(form=form, self_inner=g.det_sign())


def _check_metric(t: KTensor, g: MetricSignature) -> None:
    if t.dim != g.dim:
        raise AlgebraError(f"tensor of dimension {t.dim} used with {g.dim}-dimensional metric")


@cache
def _wedge_table(dim: int, j: int, k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    out_index = blade_index(dim, j + k)
    left, right, target, signs = [], [], [], []
    for a, blade_a in enumerate(blades(dim, j)):
        for b, blade_b in enumerate(blades(dim, k)):
            sign = sort_sign(blade_a + blade_b)
            if sign:
                left.append(a)
                right.append(b)
                target.append(out_index[tuple(sorted(blade_a + blade_b))])
                signs.append(sign)
    return (
        np.array(left, dtype=int),
        np.array(right, dtype=int),
        np.array(target, dtype=int),
        np.array(signs, dtype=float),
    )


def wedge(a: KTensor, b: KTensor) -> KTensor:
    """Exterior product of two tensors of the same variance."""
    if a.variance != b.variance:
        raise AlgebraError(f"cannot wedge a {a.variance} with a {b.variance}")
    if a.dim != b.dim:
        raise AlgebraError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if a.grade + b.grade > a.dim:
        raise AlgebraError(f"grade overflow: {a.grade} + {b.grade} > {a.dim}")

    left, right, target, signs = _wedge_table(a.dim, a.grade, b.grade)
    out = np.zeros(comb(a.dim, a.grade + b.grade))
    np.add.at(out, target, signs * a.coeffs[left] * b.coeffs[right])
    return KTensor(a.dim, a.grade + b.grade, a.variance, out)


def wedge_all(
    factors: Iterable[KTensor], dim: int, variance: Variance | str = Variance.COVECTOR
) -> KTensor:
    """Ordered wedge of `factors`; the empty product is the scalar 1."""
    return reduce(wedge, factors, KTensor.scalar(dim, 1.0, variance))


@cache
def _blade_metric(signs: tuple[int, ...], grade: int) -> np.ndarray:
    """Product of metric signs over each blade's index subset."""
    return np.array(
        [float(np.prod([signs[i] for i in blade])) for blade in blades(len(signs), grade)]
    )


def flat(v: KTensor, g: MetricSignature) -> KTensor:
    """Lower indices of a vector-valued tensor."""
    if v.variance is not Variance.VECTOR:
        raise AlgebraError("flat expects a vector-valued tensor")
    _check_metric(v, g)
    return KTensor(v.dim, v.grade, Variance.COVECTOR, v.coeffs * _blade_metric(g.signs, v.grade))


def sharp(w: KTensor, g: MetricSignature) -> KTensor:
    """Raise indices of a covector-valued tensor; inverse of `flat`."""
    if w.variance is not Variance.COVECTOR:
        raise AlgebraError("sharp expects a covector-valued tensor")
    _check_metric(w, g)
    return KTensor(w.dim, w.grade, Variance.VECTOR, w.coeffs * _blade_metric(g.signs, w.grade))


@cache
def _contraction_table(dim: int, grade: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    out_index = blade_index(dim, grade - 1)
    source, slot, target, signs = [], [], [], []
    for i, blade in enumerate(blades(dim, grade)):
        for pos, m in enumerate(blade):
            source.append(i)
            slot.append(m)
            target.append(out_index[blade[:pos] + blade[pos + 1 :]])
            signs.append(-1.0 if pos % 2 else 1.0)
    return (
        np.array(source, dtype=int),
        np.array(slot, dtype=int),
        np.array(target, dtype=int),
        np.array(signs, dtype=float),
    )


def contract(lam: KTensor, v: KTensor) -> KTensor:
    """Interior product i_lam v, a graded antiderivation in v.

    `lam` is grade 1 and of the opposite variance to `v`; the result keeps the
    variance of `v`.
    """
    if lam.grade != 1:
        raise AlgebraError(f"contraction needs a grade-1 argument, got grade {lam.grade}")
    if lam.variance == v.variance:
        raise AlgebraError("contraction needs arguments of opposite variance")
    if lam.dim != v.dim:
        raise AlgebraError(f"dimension mismatch: {lam.dim} vs {v.dim}")
    if v.grade == 0:
        raise AlgebraError("cannot contract a grade-0 tensor")

    source, slot, target, signs = _contraction_table(v.dim, v.grade)
    out = np.zeros(comb(v.dim, v.grade - 1))
    np.add.at(out, target, signs * lam.coeffs[slot] * v.coeffs[source])
    return KTensor(v.dim, v.grade - 1, v.variance, out)


def inner(a: KTensor, b: KTensor, g: MetricSignature) -> float:
    """Metric inner product extended to grade-k tensors."""
    if a.grade != b.grade:
        raise AlgebraError(f"grade mismatch: {a.grade} vs {b.grade}")
    if a.variance != b.variance:
        raise AlgebraError(f"variance mismatch: {a.variance} vs {b.variance}")
    _check_metric(a, g)
    _check_metric(b, g)
    return float(np.sum(a.coeffs * b.coeffs * _blade_metric(g.signs, a.grade)))


def pairing(form: KTensor, multivector: KTensor) -> float:
    """Evaluate a k-form on a k-vector (no metric involved)."""
    if form.variance is not Variance.COVECTOR or multivector.variance is not Variance.VECTOR:
        raise AlgebraError("pairing expects a covector-valued form and a vector-valued multivector")
    if (form.dim, form.grade) != (multivector.dim, multivector.grade):
        raise AlgebraError(
            f"cannot pair grade {form.grade} (dim {form.dim}) with grade "
            f"{multivector.grade} (dim {multivector.dim})"
        )
    return float(np.dot(form.coeffs, multivector.coeffs))


@cache
def _hodge_table(signs: tuple[int, ...], grade: int, side: HodgeSide) -> tuple[np.ndarray, np.ndarray]:
    dim = len(signs)
    metric = _blade_metric(signs, grade)
    out_index = blade_index(dim, dim - grade)
    target, factors = [], []
    for i, blade in enumerate(blades(dim, grade)):
        rest = complement(blade, dim)
        order = blade + rest if side is HodgeSide.LEFT else rest + blade
        target.append(out_index[rest])
        factors.append(metric[i] * sort_sign(order))
    return np.array(target, dtype=int), np.array(factors, dtype=float)


def hodge(w: KTensor, g: MetricSignature, side: HodgeSide | str = HodgeSide.LEFT) -> KTensor:
    """Hodge star, grade k -> grade n-k.

    With the default left side it is the unique tensor with
    u ^ *w = <u, w> Vol for every grade-k u.
    """
    _check_metric(w, g)
    target, factors = _hodge_table(g.signs, w.grade, HodgeSide(side))
    out = np.zeros(comb(w.dim, w.dim - w.grade))
    out[target] = factors * w.coeffs
    return KTensor(w.dim, w.dim - w.grade, w.variance, out)


def star_star_sign(g: MetricSignature, grade: int) -> int:
    """Sign s with ** = s on grade-`grade` tensors."""
    return g.det_sign() * (-1) ** (grade * (g.dim - grade))


def contraction_identity_check(u: KTensor, v: KTensor, g: MetricSignature) -> float:
    """Residual of i_{v#} u = (**) *(*u ^ v) for a k-form u and a 1-form v."""
    lhs = contract(sharp(v, g), u)
    rhs = star_star_sign(g, u.grade) * hodge(wedge(hodge(u, g), v), g)
    return (lhs - rhs).norm_inf()


def inner_contraction_check(v1: KTensor, v2: KTensor, v3: KTensor, g: MetricSignature) -> float:
    """Residual of <v1 ^ v2, v3> = <v2, i_{v1 flat} v3> for vector-valued inputs."""
    lhs = inner(wedge(v1, v2), v3, g)
    rhs = inner(v2, contract(flat(v1, g), v3), g)
    return abs(lhs - rhs)


def boost(rapidity: float, dim: int, axis: int = 1) -> np.ndarray:
    """Lorentz boost along `axis`, preserving the signature (-, +, ..., +)."""
    if not 1 <= axis < dim:
        raise AlgebraError(f"boost axis must be between 1 and {dim - 1}, got {axis}")
    matrix = np.eye(dim)
    matrix[0, 0] = matrix[axis, axis] = np.cosh(rapidity)
    matrix[0, axis] = matrix[axis, 0] = np.sinh(rapidity)
    return matrix

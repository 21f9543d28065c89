"""Tests for the dense exterior algebra."""

import numpy as np
import pytest

from whitney.algebra.multilinear import (
    HodgeSide,
    KTensor,
    Variance,
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
from whitney.errors import AlgebraError
from whitney.models.metric import MetricSignature, SignatureKind


def dx(dim=2):
    return KTensor.basis(dim, (0,))


def dy(dim=2):
    return KTensor.basis(dim, (1,))


class TestBlades:
    """Tests for blade enumeration and permutation parity."""

    def test_blades_lexicographic(self):
        """Blades are sorted subsets in lexicographic order."""
        assert blades(3, 2) == ((0, 1), (0, 2), (1, 2))
        assert blades(4, 0) == ((),)

    def test_sort_sign(self):
        """Parity counts inversions and vanishes on repeats."""
        assert sort_sign((0, 1, 2)) == 1
        assert sort_sign((1, 0)) == -1
        assert sort_sign((2, 1, 3, 0)) == 1
        assert sort_sign((0, 0)) == 0

    def test_basis_unsorted_blade_carries_sign(self):
        """e^1 ^ e^0 is stored as -e^01."""
        assert KTensor.basis(3, (1, 0)).coeffs[0] == -1.0

    def test_basis_rejects_long_blade(self):
        """A blade longer than the dimension is an error."""
        with pytest.raises(AlgebraError):
            KTensor.basis(2, (0, 1, 1))

    def test_coefficients_read_only(self):
        """KTensor coefficients cannot be mutated in place."""
        t = KTensor.covector([1.0, 2.0])
        with pytest.raises(ValueError):
            t.coeffs[0] = 5.0


class TestWedge:
    """Tests for the exterior product."""

    def test_wedge_antisymmetric(self):
        """dx ^ dy = -(dy ^ dx)."""
        assert wedge(dx(), dy()).coeffs[0] == 1.0
        assert wedge(dy(), dx()).coeffs[0] == -1.0

    def test_wedge_with_itself_vanishes(self):
        """A 1-form wedged with itself is zero."""
        a = KTensor.covector([0.3, -1.2, 2.0])
        assert wedge(a, a).norm_inf() == 0.0

    def test_grade_overflow(self):
        """Grades beyond the dimension are rejected."""
        with pytest.raises(AlgebraError):
            wedge(wedge(dx(), dy()), dx())

    def test_mixed_variance_rejected(self):
        """Vectors and covectors cannot be wedged together."""
        with pytest.raises(AlgebraError):
            wedge(KTensor.vector([1.0, 0.0]), dx())

    def test_empty_wedge_is_one(self):
        """The empty product is the scalar 1."""
        assert wedge_all([], 3).value == 1.0


class TestMusical:
    """Tests for flat and sharp."""

    def test_flat_lorentzian(self, lorentz2):
        """Lowering flips the time component under (-, +)."""
        assert np.allclose(flat(KTensor.vector([1.0, 2.0]), lorentz2).coeffs, [-1.0, 2.0])

    def test_sharp_inverts_flat(self, rng):
        """sharp(flat(v)) = v for any signature."""
        g = MetricSignature(dim=4, signs=(-1, 1, -1, 1))
        v = KTensor(4, 2, Variance.VECTOR, rng.uniform(-1, 1, 6))
        assert sharp(flat(v, g), g).allclose(v)

    def test_inner_timelike(self, lorentz2):
        """<dt, dt> = -1 under (-, +)."""
        assert inner(dx(), dx(), lorentz2) == -1.0
        assert inner(dy(), dy(), lorentz2) == 1.0


class TestHodge:
    """Tests for the Hodge star."""

    def test_euclidean_plane(self, euclid2):
        """*dx = dy and *dy = -dx in the Euclidean plane."""
        assert hodge(dx(), euclid2).allclose(dy())
        assert hodge(dy(), euclid2).allclose(-dx())

    def test_lorentzian_plane(self, lorentz2):
        """*e^0 = -e^1 and *e^1 = -e^0 under (-, +)."""
        assert hodge(dx(), lorentz2).allclose(-dy())
        assert hodge(dy(), lorentz2).allclose(-dx())

    def test_scalar_and_volume(self, lorentz2):
        """*1 = Vol and *Vol = det_sign."""
        vol = volume_element(lorentz2).form
        assert hodge(KTensor.scalar(2, 1.0), lorentz2).allclose(vol)
        assert hodge(vol, lorentz2).value == -1.0

    def test_right_side_differs_by_grade_sign(self, rng):
        """The right-sided star is (-1)^(k(n-k)) times the left-sided one."""
        g = MetricSignature.lorentzian(4)
        w = KTensor(4, 1, Variance.COVECTOR, rng.uniform(-1, 1, 4))
        assert hodge(w, g, side=HodgeSide.RIGHT).allclose(-hodge(w, g))

    @pytest.mark.parametrize("kind", [SignatureKind.EUCLID, SignatureKind.LORENTZ])
    @pytest.mark.parametrize("dim", [2, 3, 4])
    def test_defining_identity(self, kind, dim, rng):
        """u ^ *w = <u, w> Vol for random tensors of every grade."""
        g = MetricSignature.from_kind(kind, dim)
        vol = volume_element(g).form
        for grade in range(dim + 1):
            u = KTensor(dim, grade, Variance.COVECTOR, rng.uniform(-1, 1, len(blades(dim, grade))))
            w = KTensor(dim, grade, Variance.COVECTOR, rng.uniform(-1, 1, len(blades(dim, grade))))
            assert (wedge(u, hodge(w, g)) - vol * inner(u, w, g)).norm_inf() < 1e-12

    def test_double_star_sign(self):
        """** = det_sign * (-1)^(k(n-k))."""
        assert star_star_sign(MetricSignature.euclidean(3), 1) == 1
        assert star_star_sign(MetricSignature.euclidean(2), 1) == -1
        assert star_star_sign(MetricSignature.lorentzian(4), 1) == 1
        assert star_star_sign(MetricSignature.lorentzian(4), 2) == -1


class TestContraction:
    """Tests for the interior product."""

    def test_contract_basis(self):
        """i_{e_0}(e^01) = e^1 and i_{e_1}(e^01) = -e^0."""
        area = wedge(dx(), dy())
        assert contract(KTensor.vector([1.0, 0.0]), area).allclose(dy())
        assert contract(KTensor.vector([0.0, 1.0]), area).allclose(-dx())

    def test_contract_scalar_rejected(self):
        """Contracting a 0-form is an error."""
        with pytest.raises(AlgebraError):
            contract(KTensor.vector([1.0, 0.0]), KTensor.scalar(2, 1.0))

    def test_contraction_identity(self, rng):
        """i_{v#} u = (**) *(*u ^ v) on random forms."""
        g = MetricSignature.lorentzian(3)
        for grade in range(1, 4):
            u = KTensor(3, grade, Variance.COVECTOR, rng.uniform(-1, 1, len(blades(3, grade))))
            v = KTensor.covector(rng.uniform(-1, 1, 3))
            assert contraction_identity_check(u, v, g) < 1e-12

    def test_inner_contraction(self, rng):
        """<v1 ^ v2, v3> = <v2, i_{v1 flat} v3>."""
        g = MetricSignature.lorentzian(4)
        v1 = KTensor.vector(rng.uniform(-1, 1, 4))
        v2 = KTensor(4, 2, Variance.VECTOR, rng.uniform(-1, 1, 6))
        v3 = KTensor(4, 3, Variance.VECTOR, rng.uniform(-1, 1, 4))
        assert inner_contraction_check(v1, v2, v3, g) < 1e-12

    def test_pairing(self):
        """dx ^ dy evaluates to 1 on e_0 ^ e_1."""
        area = wedge(KTensor.vector([1.0, 0.0]), KTensor.vector([0.0, 1.0]))
        assert pairing(wedge(dx(), dy()), area) == 1.0


class TestBoost:
    """Tests for Lorentz boosts."""

    def test_boost_preserves_metric(self):
        """L^T eta L = eta."""
        eta = np.diag([-1.0, 1.0, 1.0])
        matrix = boost(0.7, 3, axis=2)
        np.testing.assert_allclose(matrix.T @ eta @ matrix, eta, atol=1e-12)

    def test_boost_axis_range(self):
        """The time axis cannot be boosted along."""
        with pytest.raises(AlgebraError):
            boost(0.1, 3, axis=0)

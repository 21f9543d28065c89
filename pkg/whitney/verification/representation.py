"""Agreement between the pointwise representations of Whitney forms."""

import numpy as np

from whitney.algebra.multilinear import boost, pairing
from whitney.forms.whitney import (
    WhitneyDescriptor,
    eval_barycentric,
    eval_covector,
    eval_vector,
    wedge_expansion_eval,
)
from whitney.geometry.simplex import Simplex
from whitney.models.metric import MetricSignature, SignatureKind

from .base import BaseSuite, TrialOutcome, relative
from .sampling import (
    affine_point,
    decomposable,
    interior_point,
    random_factors,
    random_rho,
    random_simplex,
    random_vertices,
)


class TriRepresentationSuite(BaseSuite):
    """
    Barycentric sum, complement covector, expanded covector and multivector action agree.

    Every trial draws one simplex and one random rho per form degree j.
    """

    name = "tri_representation"
    description = "Barycentric, covector and multivector evaluations coincide"
    tolerance = 1e-9

    def run_trial(self, rng: np.random.Generator, g: MetricSignature, points: int) -> TrialOutcome:
        simplex = random_simplex(rng, g)
        n = g.dim
        worst, label, checks = 0.0, "", 0

        for j in range(n + 1):
            w = WhitneyDescriptor.of(simplex, random_rho(rng, n, j))
            for _ in range(points):
                x = interior_point(rng, simplex)
                covector = eval_covector(w, x)
                u = decomposable(random_factors(rng, n, j), n)
                paired = pairing(covector, u)

                form_gap = max(
                    (eval_barycentric(w, x) - covector).norm_inf(),
                    (wedge_expansion_eval(w, x) - covector).norm_inf(),
                )
                residual = max(
                    relative(form_gap, covector.norm_inf()),
                    relative(abs(eval_vector(w, x, u) - paired), paired),
                )
                checks += 1
                if residual > worst:
                    worst, label = residual, f"rho={w.rho.indices}"

        return TrialOutcome(worst, checks, label=label)


class StructureSuite(BaseSuite):
    """Vanishing on the complement span, antisymmetry in rho and partition of unity."""

    name = "structure"
    description = "Complement vanishing, vertex-exchange antisymmetry, partition of unity"
    tolerance = 1e-9

    def run_trial(self, rng: np.random.Generator, g: MetricSignature, points: int) -> TrialOutcome:
        simplex = random_simplex(rng, g)
        assert simplex.vertices is not None
        n = g.dim
        j = int(rng.integers(0, n + 1))
        w = WhitneyDescriptor.of(simplex, random_rho(rng, n, j))
        vertex_forms = [WhitneyDescriptor.of(simplex, (k,)) for k in range(n + 1)]
        worst, checks = 0.0, 0

        for _ in range(points):
            x = interior_point(rng, simplex)
            reference = eval_covector(w, x)
            scale = reference.norm_inf()

            if j < n:
                on_span = affine_point(rng, simplex.vertices[list(w.tau)])
                worst = max(worst, relative(eval_covector(w, on_span).norm_inf(), scale))
                worst = max(worst, relative(eval_barycentric(w, on_span).norm_inf(), scale))
            if j >= 1:
                flipped = w.swapped()
                worst = max(worst, relative((eval_covector(flipped, x) + reference).norm_inf(), scale))
                worst = max(worst, relative((eval_barycentric(flipped, x) + eval_barycentric(w, x)).norm_inf(), scale))

            unity = sum(eval_barycentric(v, x).value for v in vertex_forms)
            worst = max(worst, abs(unity - 1.0))
            checks += 1

        return TrialOutcome(worst, checks, label=f"rho={w.rho.indices}")


def _opposite(g: MetricSignature) -> MetricSignature:
    kind = SignatureKind.EUCLID if g.is_lorentzian else SignatureKind.LORENTZ
    return MetricSignature.from_kind(kind, g.dim)


class MetricIndependenceSuite(BaseSuite):
    """The covector representation does not depend on the signature at fixed coordinates."""

    name = "metric_independence"
    description = "Covector output identical under Euclidean and Lorentzian signatures"
    tolerance = 1e-10

    def run_trial(self, rng: np.random.Generator, g: MetricSignature, points: int) -> TrialOutcome:
        vertices = random_vertices(rng, g.dim)
        here = Simplex.embedded(vertices, g)
        there = Simplex.embedded(vertices, _opposite(g))
        rho = random_rho(rng, g.dim, int(rng.integers(0, g.dim + 1)))
        w, w_other = WhitneyDescriptor.of(here, rho), WhitneyDescriptor.of(there, rho)

        worst = 0.0
        for _ in range(points):
            x = interior_point(rng, here)
            value = eval_covector(w, x)
            worst = max(worst, relative((value - eval_covector(w_other, x)).norm_inf(), value.norm_inf()))
        return TrialOutcome(worst, points, label=f"rho={rho}")


class LorentzEquivarianceSuite(BaseSuite):
    """w_{L sigma}(L x)[L U] = w_sigma(x)[U] for boosts L."""

    name = "lorentz_equivariance"
    description = "Whitney forms are invariant under simultaneous boosts of simplex, point and argument"
    tolerance = 1e-9
    signature_kinds = (SignatureKind.LORENTZ,)

    def run_trial(self, rng: np.random.Generator, g: MetricSignature, points: int) -> TrialOutcome:
        n = g.dim
        transform = boost(float(rng.uniform(-1.0, 1.0)), n, axis=int(rng.integers(1, n)))
        simplex = random_simplex(rng, g)
        assert simplex.vertices is not None
        boosted = Simplex.embedded(simplex.vertices @ transform.T, g)
        rho = random_rho(rng, n, int(rng.integers(0, n + 1)))
        w, w_boosted = WhitneyDescriptor.of(simplex, rho), WhitneyDescriptor.of(boosted, rho)

        worst = 0.0
        for _ in range(points):
            x = interior_point(rng, simplex)
            factors = random_factors(rng, n, w.j)
            value = eval_vector(w, x, decomposable(factors, n))
            moved = eval_vector(w_boosted, transform @ x, decomposable(factors @ transform.T, n))
            worst = max(worst, relative(abs(value - moved), value))
        return TrialOutcome(worst, points, label=f"rho={rho}")

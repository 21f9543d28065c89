"""Hodge star identities, on random tensors and on Whitney forms."""

import numpy as np

from whitney.algebra.multilinear import (
    HodgeSide,
    Variance,
    contraction_identity_check,
    hodge,
    inner,
    inner_contraction_check,
    star_star_sign,
    volume_element,
    wedge,
)
from whitney.forms.whitney import WhitneyDescriptor, eval_covector, hodge_dual_whitney
from whitney.models.metric import MetricSignature

from .base import BaseSuite, TrialOutcome, relative
from .sampling import interior_point, random_ktensor, random_rho, random_simplex


class HodgeIdentitySuite(BaseSuite):
    """u ^ *w = <u, w> Vol, ** = +-1, the contraction identities and the closed-form dual."""

    name = "hodge_identity"
    description = "Hodge star defining identity, involution sign, contraction identities"
    tolerance = 1e-10

    def run_trial(self, rng: np.random.Generator, g: MetricSignature, points: int) -> TrialOutcome:
        n = g.dim
        vol = volume_element(g).form
        worst, checks = 0.0, 0

        for _ in range(points):
            k = int(rng.integers(0, n + 1))
            u, w = random_ktensor(rng, n, k), random_ktensor(rng, n, k)
            defining = (wedge(u, hodge(w, g)) - vol * inner(u, w, g)).norm_inf()
            involution = (hodge(hodge(w, g), g) - w * star_star_sign(g, k)).norm_inf()
            worst = max(worst, defining, involution)
            checks += 2

            if k >= 1:
                v = random_ktensor(rng, n, 1)
                worst = max(worst, contraction_identity_check(u, v, g))
                checks += 1
            if k < n:
                v1 = random_ktensor(rng, n, 1, Variance.VECTOR)
                v2 = random_ktensor(rng, n, k, Variance.VECTOR)
                v3 = random_ktensor(rng, n, k + 1, Variance.VECTOR)
                worst = max(worst, inner_contraction_check(v1, v2, v3, g))
                checks += 1

        simplex = random_simplex(rng, g)
        rho = random_rho(rng, n, int(rng.integers(0, n + 1)))
        whitney = WhitneyDescriptor.of(simplex, rho)
        for _ in range(points):
            x = interior_point(rng, simplex)
            closed_form = hodge_dual_whitney(whitney, x)
            starred = hodge(eval_covector(whitney, x), g, side=HodgeSide.RIGHT)
            worst = max(worst, relative((closed_form - starred).norm_inf(), closed_form.norm_inf()))
            checks += 1

        return TrialOutcome(worst, checks, label=f"rho={rho}")

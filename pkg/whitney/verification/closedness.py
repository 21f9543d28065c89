"""Derivative identities: d of the Hodge dual and the codifferential vanish; wedge decomposition."""

import numpy as np

from whitney.errors import SkippedPointError
from whitney.forms.calculus import codifferential_fd, exterior_derivative_fd
from whitney.forms.whitney import (
    WhitneyDescriptor,
    decomposition_check,
    eval_barycentric,
    hodge_dual_field,
    whitney_field,
)
from whitney.models.metric import MetricSignature

from .base import BaseSuite, TrialOutcome, relative
from .sampling import interior_point, random_rho, random_simplex


class ClosednessSuite(BaseSuite):
    """d(*w) = 0 and delta w = 0 by central differences, for j >= 1."""

    name = "closedness"
    description = "Hodge duals of Whitney forms are closed, Whitney forms are coclosed"
    tolerance = 1e-6
    max_trials = 50

    def run_trial(self, rng: np.random.Generator, g: MetricSignature, points: int) -> TrialOutcome:
        simplex = random_simplex(rng, g)
        n = g.dim
        rho = random_rho(rng, n, int(rng.integers(1, n + 1)))
        w = WhitneyDescriptor.of(simplex, rho)
        dual, form = hodge_dual_field(w), whitney_field(w)

        worst = 0.0
        for _ in range(points):
            x = interior_point(rng, simplex)
            scale = max(dual(x).norm_inf(), form(x).norm_inf())
            worst = max(
                worst,
                relative(exterior_derivative_fd(dual, x).norm_inf(), scale),
                relative(codifferential_fd(form, x).norm_inf(), scale),
            )
        return TrialOutcome(worst, 2 * points, label=f"rho={rho}")


class DecompositionSuite(BaseSuite):
    """(l+1) w[v0..vl] ^ w[vl, vl+1] / w[vl] = w[v0..vl+1]."""

    name = "decomposition"
    description = "Whitney forms factor through lower-degree forms"
    tolerance = 1e-9

    def run_trial(self, rng: np.random.Generator, g: MetricSignature, points: int) -> TrialOutcome:
        simplex = random_simplex(rng, g)
        n = g.dim
        rho = random_rho(rng, n, int(rng.integers(1, n + 1)))
        full = WhitneyDescriptor.of(simplex, rho)

        worst, checks, skipped = 0.0, 0, 0
        for _ in range(points):
            x = interior_point(rng, simplex)
            try:
                residual = decomposition_check(simplex, rho, x)
            except SkippedPointError:
                skipped += 1
                continue
            checks += 1
            worst = max(worst, relative(residual, eval_barycentric(full, x).norm_inf()))
        return TrialOutcome(worst, checks, skipped, label=f"rho={rho}")

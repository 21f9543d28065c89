"""Whitney forms integrate to one over their own face and to zero over the others."""

import numpy as np

from whitney.forms.integration import integrate_over_subsimplex
from whitney.forms.whitney import WhitneyDescriptor, whitney_field
from whitney.geometry.simplex import faces
from whitney.models.metric import MetricSignature

from .base import BaseSuite, TrialOutcome
from .sampling import random_rho, random_simplex


class NormalizationSuite(BaseSuite):
    """Integral of w_rho over rho is 1 and over every other j-face is 0."""

    name = "normalization"
    description = "Normalization and biorthogonality of the Whitney basis"
    tolerance = 1e-10
    max_trials = 50

    def run_trial(self, rng: np.random.Generator, g: MetricSignature, points: int) -> TrialOutcome:
        simplex = random_simplex(rng, g)
        n = g.dim
        worst, label, checks = 0.0, "", 0

        for j in range(n + 1):
            rho = random_rho(rng, n, j)
            field = whitney_field(WhitneyDescriptor.of(simplex, rho), "covector")
            own = abs(integrate_over_subsimplex(field, rho) - 1.0)
            checks += 1
            if own > worst:
                worst, label = own, f"own face {rho}"
            for face in faces(simplex, j):
                if set(face.indices) == set(rho):
                    continue
                other = abs(integrate_over_subsimplex(field, face))
                checks += 1
                if other > worst:
                    worst, label = other, f"rho={rho} face={face.indices}"

        return TrialOutcome(worst, checks, label=label)

"""Whitney forms, their Hodge duals, integration and finite-difference calculus."""

from whitney.forms.calculus import codifferential_fd, exterior_derivative_fd
from whitney.forms.integration import integrate_over_subsimplex
from whitney.forms.whitney import (
    FormField,
    WhitneyDescriptor,
    decomposition_check,
    eval_barycentric,
    eval_covector,
    eval_vector,
    hodge_dual_field,
    hodge_dual_whitney,
    vector_proxy,
    wedge_expansion_eval,
    whitney_field,
)

__all__ = [
    "FormField",
    "WhitneyDescriptor",
    "codifferential_fd",
    "decomposition_check",
    "eval_barycentric",
    "eval_covector",
    "eval_vector",
    "exterior_derivative_fd",
    "hodge_dual_field",
    "hodge_dual_whitney",
    "integrate_over_subsimplex",
    "vector_proxy",
    "wedge_expansion_eval",
    "whitney_field",
]

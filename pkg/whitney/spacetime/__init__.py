"""Lorentzian cylinder meshes, the variational wave integrator and exports."""

from whitney.spacetime.diagnostics import diagnostics, write_diagnostics_csv
from whitney.spacetime.export import export_csv, export_ply, read_field_csv, read_ply
from whitney.spacetime.mesh import (
    build_cylinder_mesh,
    build_lightcone_mesh,
    build_mesh,
    load_mesh_json,
    save_mesh_json,
    triangle_simplex,
    validate,
)
from whitney.spacetime.wave import (
    ActionFunctional,
    DiscreteField,
    ElementMatrix,
    Pipeline,
    discrete_action,
    el_residual,
    element_matrix,
    exact_solution,
    march,
    run_wave,
    solve_global,
)

__all__ = [
    "ActionFunctional",
    "DiscreteField",
    "ElementMatrix",
    "Pipeline",
    "build_cylinder_mesh",
    "build_lightcone_mesh",
    "build_mesh",
    "diagnostics",
    "discrete_action",
    "el_residual",
    "element_matrix",
    "exact_solution",
    "export_csv",
    "export_ply",
    "load_mesh_json",
    "march",
    "read_field_csv",
    "read_ply",
    "run_wave",
    "save_mesh_json",
    "solve_global",
    "triangle_simplex",
    "validate",
    "write_diagnostics_csv",
]

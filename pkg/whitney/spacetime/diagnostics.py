"""Dispersion and dissipation diagnostics of a wave run."""

import csv
from pathlib import Path

import numpy as np

from whitney.errors import ExportError, MeshError
from whitney.logging_config import get_logger
from whitney.models.mesh import SpacetimeMesh
from whitney.models.report import Diagnostics, SliceDiagnostics
from whitney.spacetime.wave import DiscreteField, exact_solution

logger = get_logger(__name__)

DIAGNOSTICS_COLUMNS = ["slice", "t", "l2_error", "mode1_amp", "mode1_phase"]


def diagnostics(field: DiscreteField, mesh: SpacetimeMesh) -> Diagnostics:
    """Per-slice L2 error against the exact wave and the spatial Fourier mode 1."""
    n = mesh.nodes_per_slice
    if len(field) != mesh.num_nodes:
        raise MeshError(f"field has {len(field)} values for a mesh of {mesh.num_nodes} nodes")

    x = np.arange(n) * mesh.dx
    length = mesh.circumference
    rows = []
    for k, values in enumerate(field.as_grid()):
        t = k * mesh.dt
        error = values - exact_solution(x, t, length)
        mode = np.fft.fft(values)[1]
        rows.append(
            SliceDiagnostics(
                slice=k,
                t=t,
                l2_error=float(np.sqrt(mesh.dx * np.sum(error**2))),
                mode1_amp=float(2 * abs(mode) / n),
                mode1_phase=float(np.angle(mode)),
                exact_phase=float(-2 * np.pi * t / length - np.pi / 2),
            )
        )

    result = Diagnostics(slices=rows)
    logger.info(
        f"Diagnostics: final L2 error {result.final_l2_error():.3e}, "
        f"amplitude drift {result.amplitude_drift():.3e}, "
        f"final phase error {result.final_phase_error():.3e}"
    )
    return result


def write_diagnostics_csv(result: Diagnostics, path: str | Path) -> Path:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(DIAGNOSTICS_COLUMNS)
            for row in result.slices:
                writer.writerow(
                    [row.slice, repr(row.t), repr(row.l2_error), repr(row.mode1_amp), repr(row.mode1_phase)]
                )
    except OSError as e:
        raise ExportError(f"cannot write diagnostics to {target}: {e}") from e
    return target

"""CLI commands for whitney-spacetime."""

import argparse
import json
import sys
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import ValidationError

from whitney.config import settings
from whitney.errors import ExportError, MeshError, SolverError
from whitney.logging_config import get_logger, setup_logging
from whitney.models.run_config import Command, RunConfig

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_SOLVER = 3


def verify_command(config: RunConfig) -> int:
    """Run every property suite and print the worst residual of each."""
    from whitney.verification import VerificationRunner

    dims = ",".join(map(str, config.dims))
    signatures = ",".join(map(str, config.signatures))
    print(f"Verifying Whitney forms (dims {dims}, signatures {signatures}, trials {config.trials}, seed {config.seed})")
    print()

    report = VerificationRunner().run(config)

    for result in report.results:
        mark = "PASS" if result.passed else result.status.value.upper()
        print(
            f"  {mark:<6} {result.name:<22} max residual {result.max_residual:.3e} "
            f"(tol {result.tolerance:.0e}, {result.checks} checks, {result.skipped} skipped)"
        )
        if not result.passed and result.worst_case:
            print(f"         worst case: {result.worst_case}")
    print()

    if report.errors:
        print("Errors:")
        for error in report.errors:
            print(f"  {error}")
        print()

    if report.passed:
        print(f"All {len(report.results)} suites passed in {report.processing_time_ms} ms")
        return EXIT_OK
    print(f"Failed suites: {', '.join(report.failed_suites())}")
    return EXIT_VERIFY_FAILED


def wave_command(config: RunConfig) -> int:
    """Build the mesh, march the travelling wave and write field, diagnostics and mesh files."""
    from whitney.spacetime import (
        build_mesh,
        diagnostics,
        export_csv,
        export_ply,
        run_wave,
        save_mesh_json,
        validate,
        write_diagnostics_csv,
    )
    from whitney.spacetime.wave import exact_field

    try:
        spec = config.mesh_spec()
        mesh = build_mesh(spec)
    except (ValidationError, MeshError) as e:
        print(f"Error: invalid mesh: {e}")
        return EXIT_CONFIG

    violations = validate(mesh)
    if violations:
        print("Error: mesh failed validation:")
        for violation in violations[:10]:
            print(f"  {violation.code}: {violation.message}")
        return EXIT_CONFIG

    print(
        f"Wave run: {spec.style} mesh, {spec.nodes_per_slice} nodes x {spec.num_slices} slices, "
        f"dx={spec.dx:.6g}, dt={spec.dt:.6g}, {config.pipeline} pipeline"
    )

    try:
        field = run_wave(mesh, config.pipeline, config.threads)
    except SolverError as e:
        print(f"Error: {e} (slice {e.slice_index})")
        return EXIT_SOLVER

    result = diagnostics(field, mesh)
    max_error = float(np.max(np.abs(field.values - exact_field(mesh).values)))

    out = config.out
    try:
        paths = [
            export_csv(field, mesh, out / "field.csv"),
            write_diagnostics_csv(result, out / "diagnostics.csv"),
            save_mesh_json(mesh, out / "mesh.json"),
            export_ply(mesh, field, out / "field.ply"),
        ]
    except ExportError as e:
        print(f"Error: {e}")
        return EXIT_CONFIG

    print()
    print(f"  Final-slice L2 error:  {result.final_l2_error():.6e}")
    print(f"  Max nodal error:       {max_error:.6e}")
    print(f"  Mode-1 amplitude drift: {result.amplitude_drift():.6e}")
    print(f"  Mode-1 phase error:    {result.final_phase_error():.6e}")
    print()
    print("Wrote:")
    for path in paths:
        print(f"  {path}")
    return EXIT_OK


def export_ply_command(config: RunConfig) -> int:
    """Convert a field CSV plus mesh JSON into a PLY file."""
    from whitney.spacetime import export_ply, load_mesh_json, read_field_csv

    if config.field is None or config.mesh is None:
        print("Error: export-ply needs --field and --mesh")
        return EXIT_CONFIG

    try:
        mesh = load_mesh_json(config.mesh)
        field = read_field_csv(config.field)
        path = export_ply(mesh, field, config.out / "field.ply")
    except (ExportError, MeshError) as e:
        print(f"Error: {e}")
        return EXIT_CONFIG

    print(f"Wrote {path} ({mesh.num_nodes} vertices, {len(mesh.triangles)} faces)")
    return EXIT_OK


def _load_config_file(path: str | None) -> dict[str, Any]:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ValueError(f"cannot read config file {path}: {e}") from e
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must hold a JSON object")
    return data


def build_config(args: argparse.Namespace) -> RunConfig:
    """Settings defaults, then the JSON config file, then explicit flags."""
    merged = _load_config_file(args.config)
    flags = {
        "dims": getattr(args, "dims", None),
        "signatures": getattr(args, "signature", None),
        "seed": getattr(args, "seed", None),
        "trials": getattr(args, "trials", None),
        "points": getattr(args, "points", None),
        "threads": getattr(args, "threads", None),
        "style": getattr(args, "style", None),
        "nodes": getattr(args, "nodes", None),
        "slices": getattr(args, "slices", None),
        "dx": getattr(args, "dx", None),
        "dt": getattr(args, "dt", None),
        "periods": getattr(args, "periods", None),
        "pipeline": getattr(args, "pipeline", None),
        "out": getattr(args, "out", None),
        "field": getattr(args, "field", None),
        "mesh": getattr(args, "mesh", None),
    }
    merged.update({key: value for key, value in flags.items() if value is not None})
    merged["command"] = args.command
    return RunConfig(**merged)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON file with run configuration (flags win)")
    parser.add_argument("--out", help=f"Output directory (default: ./{settings.out_dir}/)")
    parser.add_argument("--threads", type=int, help="Parallelism cap (default: WHITNEY_THREADS)")


def main(argv: list[str] | None = None) -> int:
    """CLI entry point."""
    setup_logging(settings.log_level)

    parser = argparse.ArgumentParser(
        prog="whitney",
        description="Whitney forms on flat spacetimes and a variational wave integrator",
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # verify command
    verify_parser = subparsers.add_parser("verify", help="Run the Whitney form property suites")
    _add_common(verify_parser)
    verify_parser.add_argument("--dims", help="Comma-separated dimensions (default: 2,3,4)")
    verify_parser.add_argument(
        "--signature", choices=["lorentz", "euclid", "both"], help="Metric signatures to test"
    )
    verify_parser.add_argument("--seed", type=int, help="Random seed (default: 42)")
    verify_parser.add_argument("--trials", type=int, help="Random simplices per configuration")
    verify_parser.add_argument("--points", type=int, help="Sample points per trial (default: 20)")

    # wave command
    wave_parser = subparsers.add_parser("wave", help="Simulate the 1+1 wave equation")
    _add_common(wave_parser)
    wave_parser.add_argument("--style", choices=["regular", "lightcone"], help="Mesh style")
    wave_parser.add_argument("--nodes", type=int, help="Nodes per spacelike slice (default: 30)")
    wave_parser.add_argument("--slices", type=int, help="Number of slices (default: from --periods)")
    wave_parser.add_argument("--dx", type=float, help="Spatial step (default: 1/nodes)")
    wave_parser.add_argument("--dt", type=float, help="Time step (default: 0.8 dx, or dx on lightcone meshes)")
    wave_parser.add_argument("--periods", type=float, help="Simulated time in wave periods (default: 2)")
    wave_parser.add_argument("--pipeline", choices=["abstract", "embedded"], help="Element metric source")

    # export-ply command
    export_parser = subparsers.add_parser("export-ply", help="Write a PLY file from field CSV and mesh JSON")
    _add_common(export_parser)
    export_parser.add_argument("--field", help="Field CSV written by `wave`")
    export_parser.add_argument("--mesh", help="Mesh JSON written by `wave`")

    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_OK

    try:
        config = build_config(args)
    except (ValidationError, ValueError) as e:
        print(f"Error: invalid config: {e}")
        return EXIT_CONFIG

    if config.command == Command.VERIFY:
        return verify_command(config)
    elif config.command == Command.WAVE:
        return wave_command(config)
    else:
        return export_ply_command(config)


if __name__ == "__main__":
    sys.exit(main())

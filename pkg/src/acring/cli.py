"""Command-line front end: field/phase evaluation, parameter sweeps, spectra.

Subcommands: ``phase``, ``sweep``, ``figures``, ``spectrum``, ``selfcheck``.
Exit codes: 0 success, 2 usage error, 3 singular geometry, 4 numerics.
Every output file is accompanied by a run-manifest JSON; CSV output uses a
dot decimal separator, 17 significant digits, and LF line endings, so equal
inputs reproduce byte-identical files.
"""

from __future__ import annotations

import argparse
import datetime
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .errors import NumericsError, SingularGeometryError
from .fields import ACConfig
from .holonomy import METHODS, IntegratorSpec, propagate
from .phase import ACPhaseResult, continue_branch, extract_phase
from .spectrum import SpectrumConfig, solve_spectrum

CSV_HEADER = "param,cos_phi,phi_ac_principal,phi_ac_continued,axis_x,axis_y,axis_z"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GEOMETRY = 3
EXIT_NUMERICS = 4

# Tilt values of the charge-ratio sweep figure and charge ratios of the
# tilt sweep figure, keyed by series label.
FIG2_THETAS = [
    ("0", 0.0),
    ("1pi20", math.pi / 20),
    ("2pi20", math.pi / 10),
    ("3pi20", 3 * math.pi / 20),
    ("4pi20", math.pi / 5),
]
FIG3_LAMBDAS = [
    ("0p1", 0.1),
    ("0p2", 0.2),
    ("0p3", 0.3),
    ("0p4", 0.4),
    ("0p6", 0.6),
    ("0p7", 0.7),
    ("0p8", 0.8),
    ("0p9", 0.9),
    ("1p0", 1.0),
]
FIG2_RANGE = (0.0, 4.0, 801)
FIG3_RANGE = (0.0, 0.45 * math.pi, 181)

_MIN_CONTINUED_POINTS = 16


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _max_workers() -> int:
    env = os.environ.get("AC_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise SystemExit(EXIT_USAGE)
        if n >= 1:
            return n
        raise SystemExit(EXIT_USAGE)
    return os.cpu_count() or 1


def _integrator_spec(args: argparse.Namespace) -> IntegratorSpec:
    return IntegratorSpec(method=args.method, steps=args.steps)


def _write_manifest(path: str, command: str, parameters: dict, spec: IntegratorSpec) -> None:
    manifest = {
        "command": command,
        "parameters": parameters,
        "library_version": __version__,
        "integrator": {
            "method": spec.method,
            "steps": spec.steps,
            "tolerance": spec.tolerance,
        },
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _sweep_points(
    values: list[float], theta_of: callable, lambda_of: callable, spec: IntegratorSpec
) -> list[tuple[float, ACPhaseResult]]:
    """Propagate and extract at every sweep value, fanning out over threads."""

    def worker(v: float) -> ACPhaseResult:
        return extract_phase(propagate(ACConfig(lambda_of(v), theta_of(v)), spec))

    with ThreadPoolExecutor(max_workers=_max_workers()) as pool:
        results = list(pool.map(worker, values))
    return list(zip(values, results))


def _write_sweep_csv(path: str, points: list[tuple[float, ACPhaseResult]]) -> None:
    lines = [CSV_HEADER]
    for param, r in points:
        continued = r.phi_ac_continued if r.phi_ac_continued is not None else math.nan
        lines.append(
            ",".join(
                [
                    _fmt(param),
                    _fmt(r.cos_phi),
                    _fmt(r.phi_ac_principal),
                    _fmt(continued),
                    _fmt(r.axis[0]),
                    _fmt(r.axis[1]),
                    _fmt(r.axis[2]),
                ]
            )
        )
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def _continued_phase_at(lambda_ratio: float, theta: float, spec: IntegratorSpec) -> ACPhaseResult:
    """Resolve the branch of a single phase by an internal sweep from zero."""
    if lambda_ratio == 0.0:
        result = extract_phase(propagate(ACConfig(0.0, theta), spec))
        return continue_branch([(0.0, result)]).points[0][1]
    n = max(33, int(math.ceil(abs(lambda_ratio) / 0.01)) + 1)
    lambdas = _linspace(0.0, lambda_ratio, n)
    points = _sweep_points(lambdas, lambda _v: theta, lambda v: v, spec)
    return continue_branch(points).points[-1][1]


def cmd_phase(args: argparse.Namespace) -> int:
    theta = math.radians(args.theta) if args.degrees else args.theta
    spec = _integrator_spec(args)
    if args.branch == "principal":
        result = extract_phase(propagate(ACConfig(args.lambda_ratio, theta), spec))
        phi = result.phi_ac_principal
    else:
        result = _continued_phase_at(args.lambda_ratio, theta, spec)
        phi = result.phi_ac_continued
    payload = {
        "phi_ac": phi,
        "cos_phi": result.cos_phi,
        "axis": list(result.axis),
        "method": spec.method,
        "steps": spec.steps,
    }
    print(json.dumps(payload))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    lo, hi = args.sweep_from, args.sweep_to
    if args.points < 1 or hi < lo:
        print("invalid sweep range", file=sys.stderr)
        return EXIT_USAGE
    if args.branch == "continued-from-zero" and args.points < _MIN_CONTINUED_POINTS:
        print(
            f"continued branch needs at least {_MIN_CONTINUED_POINTS} points",
            file=sys.stderr,
        )
        return EXIT_USAGE
    spec = _integrator_spec(args)
    values = _linspace(lo, hi, args.points)
    if args.sweep == "lambda":
        theta = math.radians(args.theta) if args.degrees else args.theta
        points = _sweep_points(values, lambda _v: theta, lambda v: v, spec)
    else:
        values = [math.radians(v) for v in values] if args.degrees else values
        points = _sweep_points(values, lambda v: v, lambda _v: args.lambda_ratio, spec)
    if args.branch == "continued-from-zero":
        name = "lambda_ratio" if args.sweep == "lambda" else "theta"
        points = list(continue_branch(points, parameter_name=name).points)
    _write_sweep_csv(args.out, points)
    _write_manifest(
        args.out + ".manifest.json",
        "sweep",
        {
            "sweep": args.sweep,
            "from": lo,
            "to": hi,
            "points": args.points,
            "lambda_ratio": args.lambda_ratio,
            "theta": args.theta,
            "branch": args.branch,
            "degrees": args.degrees,
            "out": args.out,
        },
        spec,
    )
    return EXIT_OK


def _figure_series(which: str) -> list[tuple[str, str, float, tuple[float, float, int]]]:
    if which == "fig2":
        return [("fig2_theta_%s.csv" % tag, "lambda", theta, FIG2_RANGE) for tag, theta in FIG2_THETAS]
    return [("fig3_lambda_%s.csv" % tag, "theta", lam, FIG3_RANGE) for tag, lam in FIG3_LAMBDAS]


def cmd_figures(args: argparse.Namespace) -> int:
    spec = _integrator_spec(args)
    os.makedirs(args.out_dir, exist_ok=True)
    for filename, sweep_kind, fixed, (lo, hi, n) in _figure_series(args.which):
        values = _linspace(lo, hi, n)
        if sweep_kind == "lambda":
            points = _sweep_points(values, lambda _v: fixed, lambda v: v, spec)
        else:
            points = _sweep_points(values, lambda v: v, lambda _v: fixed, spec)
        name = "lambda_ratio" if sweep_kind == "lambda" else "theta"
        points = list(continue_branch(points, parameter_name=name).points)
        path = os.path.join(args.out_dir, filename)
        _write_sweep_csv(path, points)
        _write_manifest(
            path + ".manifest.json",
            "figures",
            {"which": args.which, "series": filename, "fixed": fixed, "points": n},
            spec,
        )
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    theta = math.radians(args.theta) if args.degrees else args.theta
    config = SpectrumConfig(
        ac=ACConfig(args.lambda_ratio, theta),
        kappa_pol=args.kappa_pol,
        basis_cutoff=args.basis_cutoff,
        holonomy_spec=_integrator_spec(args),
    )
    result = solve_spectrum(config, args.levels)
    payload = {
        "energies": list(result.energies),
        "quasi_momenta": list(result.quasi_momenta),
        "potential_mean": result.potential_mean,
        "basis_cutoff": args.basis_cutoff,
        "levels": args.levels,
    }
    print(json.dumps(payload))
    return EXIT_OK


def cmd_selfcheck(args: argparse.Namespace) -> int:
    from .selfcheck import run_selfcheck

    results = run_selfcheck()
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return EXIT_OK if all(ok for _, ok, _ in results) else 1


def _validate_theta_range(theta: float, degrees: bool) -> None:
    value = math.radians(theta) if degrees else theta
    if not 0.0 <= value < math.pi / 2:
        raise SingularGeometryError(
            f"theta must lie in [0, pi/2) radians, got {value!r}"
        )


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--steps", type=int, default=4096, help="uniform integrator steps")
    p.add_argument("--method", choices=METHODS, default="commutator_free_4")
    p.add_argument("--degrees", action="store_true", help="interpret angles in degrees")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acring",
        description="Spin-1/2 ring holonomy around a tilted line charge: "
        "phases, sweeps, and twisted-boundary spectra.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("phase", help="single holonomy phase")
    p.add_argument("--lambda-ratio", dest="lambda_ratio", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument(
        "--branch",
        choices=["principal", "continued-from-zero"],
        default="continued-from-zero",
    )
    _add_common_flags(p)
    p.set_defaults(func=cmd_phase)

    p = sub.add_parser("sweep", help="parameter sweep to CSV")
    p.add_argument("--sweep", choices=["lambda", "theta"], required=True)
    p.add_argument("--from", dest="sweep_from", type=float, required=True)
    p.add_argument("--to", dest="sweep_to", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--lambda-ratio", dest="lambda_ratio", type=float, default=0.5)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument(
        "--branch",
        choices=["principal", "continued-from-zero"],
        default="continued-from-zero",
    )
    p.add_argument("--out", required=True)
    _add_common_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figures", help="write the standard sweep CSV sets")
    p.add_argument("--which", choices=["fig2", "fig3"], required=True)
    p.add_argument("--out-dir", dest="out_dir", required=True)
    _add_common_flags(p)
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("spectrum", help="twisted-boundary ring spectrum")
    p.add_argument("--lambda-ratio", dest="lambda_ratio", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--kappa-pol", dest="kappa_pol", type=float, default=0.0)
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--basis-cutoff", dest="basis_cutoff", type=int, default=32)
    _add_common_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("selfcheck", help="run the embedded invariant suite")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "theta", None) is not None and args.subcommand in (
            "phase",
            "figures",
            "spectrum",
        ):
            _validate_theta_range(args.theta, getattr(args, "degrees", False))
        if args.subcommand == "sweep":
            if args.sweep == "lambda":
                _validate_theta_range(args.theta, args.degrees)
            else:
                _validate_theta_range(args.sweep_from, args.degrees)
                _validate_theta_range(args.sweep_to, args.degrees)
        return args.func(args)
    except SingularGeometryError as exc:
        print(f"geometry error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except NumericsError as exc:
        print(f"numerics error: {exc}", file=sys.stderr)
        return EXIT_NUMERICS
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``varreg boundary | bounds | sample | verify``.

Exit codes: 0 success, 2 invalid parameters, 3 quadrature or continuation
failure, 4 sampled point outside the region, 5 failed invariant.
The default quadrature tolerance comes from ``VARREG_TOL`` when set; an
explicit ``--tol`` wins over the variable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import check_tangency, g_roots, path_bound
from .checks import run_suite
from .core import ClassParams, as_complex, validate_params
from .errors import ContinuationError, InvalidParams, QuadratureError
from .extremal import degenerate_value
from .presets import PRESET_IDS, get_preset
from .quadrature import DEFAULT_TOL, radial_path
from .region import OUTSIDE, boundary_curve, contains, convex_hull, is_convex, is_simple
from .samplers import log_f_batch, random_members

EXIT_OK, EXIT_PARAMS, EXIT_NUMERIC, EXIT_OUTSIDE, EXIT_VERIFY = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """17 significant digits, enough to round-trip a double."""
    return f"{float(x):.17g}"


def env_tol() -> float:
    raw = os.environ.get("VARREG_TOL")
    if not raw:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"VARREG_TOL={raw!r} is not a number") from None
    if not (0 < tol < 1):
        raise UsageError(f"VARREG_TOL must lie in (0, 1), got {raw}")
    return tol


def _complex_arg(text: str) -> complex:
    try:
        return as_complex(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _jsonable_complex(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _resolve_cases(args) -> list[tuple[str, ClassParams, complex]]:
    """``[(label, params, z0)]`` from ``--preset`` or the explicit triple."""
    if args.preset:
        ids = PRESET_IDS if args.preset.lower() == "all" else [args.preset]
        cases = []
        for pid in ids:
            try:
                p = get_preset(pid)
            except KeyError as exc:
                raise UsageError(exc.args[0]) from None
            cases.append((p.id, p.params, p.z0))
        return cases
    missing = [name for name in ("z0", "lam", "mu") if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--lambda" if m == "lam" else f"--{m}" for m in missing)
        raise UsageError(f"missing {flags} (or use --preset)")
    try:
        params = ClassParams(args.mu, args.lam)
    except ValueError as exc:
        raise InvalidParams(str(exc)) from None
    return [("custom", params, args.z0)]


def _params_json(params: ClassParams, z0: complex) -> dict:
    return {"z0": _jsonable_complex(z0), "lambda": _jsonable_complex(params.lam),
            "mu": _jsonable_complex(params.mu)}


def _per_case_path(base: Path, label: str, many: bool) -> Path:
    if not many:
        return base
    base.mkdir(parents=True, exist_ok=True)
    return base / f"{label}"


def _with_suffix(path: Path, suffix: str) -> Path:
    return path if path.suffix == suffix else path.with_name(path.name + suffix)


# --- SVG ---------------------------------------------------------------------

def render_svg(w, centroid: complex, size: int = 480) -> str:
    """Single-polyline SVG 1.1 document; imaginary axis points up."""
    w = np.asarray(w, dtype=complex)
    xs, ys = w.real, -w.imag
    span = max(np.ptp(xs), np.ptp(ys))
    span = span if span > 0 else 1.0
    pad = 0.05 * span
    x0, y0 = xs.min() - pad, ys.min() - pad
    width, height = np.ptp(xs) + 2 * pad, np.ptp(ys) + 2 * pad
    stroke = fmt(span / 400)
    closed = np.concatenate([w, w[:1]])
    points = " ".join(f"{fmt(z.real)},{fmt(-z.imag)}" for z in closed)
    cx, cy = centroid.real, -centroid.imag
    arm = 0.05 * span
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
        f'height="{size}" viewBox="{fmt(x0)} {fmt(y0)} {fmt(width)} {fmt(height)}" '
        'preserveAspectRatio="xMidYMid meet">',
        f'<path d="M {fmt(cx - arm)} {fmt(cy)} H {fmt(cx + arm)} M {fmt(cx)} {fmt(cy - arm)} '
        f'V {fmt(cy + arm)}" stroke="gray" stroke-width="{stroke}" fill="none"/>',
        f'<polyline points="{points}" stroke="black" stroke-width="{stroke}" fill="none"/>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


# --- subcommands ---------------------------------------------------------------

def cmd_boundary(args) -> int:
    cases = _resolve_cases(args)
    many = len(cases) > 1
    for label, params, z0 in cases:
        problem = validate_params(params, z0, warn=False)
        curve = boundary_curve(params, problem.z0, args.samples, args.tol, args.spacing)
        out = _with_suffix(_per_case_path(Path(args.out), label, many), ".csv")
        rows = ["theta,re,im"] + [f"{fmt(t)},{fmt(w.real)},{fmt(w.imag)}"
                                  for t, w in zip(curve.theta, curve.w)]
        out.write_text("\n".join(rows) + "\n")
        meta = {"preset": label, "params": _params_json(params, problem.z0), "tol": args.tol,
                "samples": len(curve), "spacing": curve.spacing, "singleton": curve.singleton,
                "notes": list(problem.notes)}
        if curve.singleton:
            meta.update(convex=True, simple=True)
        else:
            poly = curve.polygon()
            report = is_convex(poly)
            meta.update(convex=report.convex, simple=is_simple(poly),
                        worst_cross_product=report.worst_value, diameter=poly.diameter)
        _write_json(out.with_suffix(".json"), meta)
        if args.svg:
            svg = _with_suffix(_per_case_path(Path(args.svg), label, many), ".svg")
            centroid = curve.w[0] if curve.singleton else curve.polygon().centroid()
            svg.write_text(render_svg(curve.w, centroid))
        print(f"{label}: {len(curve)} samples -> {out}")
    return EXIT_OK


def _read_curve(path: Path) -> np.ndarray:
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return data[:, 1] + 1j * data[:, 2]


def cmd_bounds(args) -> int:
    reports = []
    for label, params, z0 in _resolve_cases(args):
        problem = validate_params(params, z0, warn=False)
        z0 = problem.z0
        report = {"preset": label, "params": _params_json(params, z0), "path": args.path,
                  "tol": args.tol}
        if problem.singleton:
            report.update(center=_jsonable_complex(degenerate_value(params, z0)), radius=0.0)
        elif args.path == "radial":
            disk = path_bound(params, radial_path(z0), args.tol)
            report.update(center=_jsonable_complex(disk.center), radius=disk.radius)
            if args.curve:
                excess = float(np.max(disk.excess(_read_curve(Path(args.curve)))))
                report["curve_max_excess"] = excess
                report["curve_contained"] = bool(excess <= 1e-8 * disk.radius)
        else:
            t = check_tangency(g_roots(args.theta, params), z0, quad_tol=args.tol)
            report.update(theta=args.theta, center=_jsonable_complex(t.center), radius=t.radius,
                          boundary_point=_jsonable_complex(t.boundary_point),
                          G_z0=_jsonable_complex(t.G_z0),
                          tangency_residual=t.relative_residual,
                          direction_error=t.direction_error)
        reports.append(report)
    text = json.dumps(reports if len(reports) > 1 else reports[0], indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_sample(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    cases = _resolve_cases(args)
    many = len(cases) > 1
    total_out = 0
    for label, params, z0 in cases:
        problem = validate_params(params, z0, warn=False)
        z0 = problem.z0
        members = random_members(args.seed, params, args.count, args.max_degree)
        values, _ = log_f_batch(members, z0, args.tol)
        fill = None
        if problem.singleton:
            w0 = degenerate_value(params, z0)
            dist = np.abs(values - w0)
            labels = np.where(dist <= 1e-9 * (1 + abs(w0)), "boundary", OUTSIDE)
        elif args.count:
            poly = boundary_curve(params, z0, 512, args.tol).polygon()
            labels = np.atleast_1d(contains(poly, values, args.band))
            # reported only: the Blaschke family need not fill the region
            fill = convex_hull(values).area / poly.area
        else:
            labels = np.array([], dtype=str)
        out = _with_suffix(_per_case_path(Path(args.out), label, many), ".csv")
        rows = ["index,seed,re,im,verdict"] + [
            f"{i},{args.seed + i},{fmt(v.real)},{fmt(v.imag)},{lab}"
            for i, (v, lab) in enumerate(zip(values, labels))]
        out.write_text("\n".join(rows) + "\n")
        counts = {k: int(np.sum(labels == k)) for k in ("inside", "boundary", "outside")}
        _write_json(out.with_suffix(".json"), {
            "preset": label, "params": _params_json(params, z0), "tol": args.tol,
            "count": args.count, "seed": args.seed, "max_degree": args.max_degree,
            "band": args.band, "inside": counts["inside"], "boundary": counts["boundary"],
            "outsiders": counts["outside"], "fill_ratio": fill})
        total_out += counts["outside"]
        print(f"{label}: {args.count} members, {counts['outside']} outside -> {out}")
    return EXIT_OUTSIDE if total_out else EXIT_OK


def cmd_verify(args) -> int:
    summary = []
    first_failure = None
    for label, params, z0 in _resolve_cases(args):
        results = run_suite(params, z0, quick=args.quick, tol=args.tol)
        ok = all(r.passed for r in results)
        print(f"== {label} ==")
        for r in results:
            print(f"  {'PASS' if r.passed else 'FAIL'}  {r.name:<22} {r.value:11.3e}  "
                  f"limit {r.limit:.1e}  {r.seconds:6.2f}s")
            if not r.passed and first_failure is None:
                first_failure = f"{label}:{r.name}"
        summary.append({"preset": label, "passed": ok,
                        "checks": [r.as_dict() for r in results]})
    passed = sum(s["passed"] for s in summary)
    print(f"{passed}/{len(summary)} parameter sets pass")
    if args.json:
        _write_json(Path(args.json), {"passed": passed, "total": len(summary), "cases": summary})
    if first_failure:
        print(f"first failing invariant: {first_failure}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", help=f"one of {', '.join(PRESET_IDS)} or 'all'")
    common.add_argument("--z0", type=_complex_arg, help="evaluation point RE,IM")
    common.add_argument("--lambda", dest="lam", type=_complex_arg, help="lambda RE,IM")
    common.add_argument("--mu", type=_complex_arg, help="mu RE,IM")
    common.add_argument("--tol", type=float, default=None,
                        help="quadrature tolerance (default: $VARREG_TOL or 1e-10)")

    p = argparse.ArgumentParser(prog="varreg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("boundary", parents=[common], help="trace the region boundary")
    b.add_argument("--samples", type=int, default=512)
    b.add_argument("--spacing", choices=("adaptive", "uniform"), default="adaptive")
    b.add_argument("--out", required=True, help="CSV path (directory with --preset all)")
    b.add_argument("--svg", help="SVG path (directory with --preset all)")
    b.set_defaults(func=cmd_boundary)

    d = sub.add_parser("bounds", parents=[common], help="disk bound along a path")
    d.add_argument("--path", choices=("radial", "gamma0"), default="radial")
    d.add_argument("--theta", type=float, default=0.0)
    d.add_argument("--curve", help="boundary CSV to test against the radial disk")
    d.add_argument("--out", help="JSON path (default stdout)")
    d.set_defaults(func=cmd_bounds)

    s = sub.add_parser("sample", parents=[common], help="evaluate random class members")
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-degree", type=int, default=4)
    s.add_argument("--band", type=float, default=1e-6, help="boundary band relative to diameter")
    s.add_argument("--out", required=True, help="CSV path (directory with --preset all)")
    s.set_defaults(func=cmd_sample)

    v = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    v.add_argument("--quick", action="store_true")
    v.add_argument("--json", help="write the report as JSON")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARAMS if exc.code else EXIT_OK
    try:
        if args.tol is None:
            args.tol = env_tol()
        elif not (0 < args.tol < 1):
            raise UsageError("--tol must lie in (0, 1)")
        return args.func(args)
    except (UsageError, InvalidParams, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except (QuadratureError, ContinuationError) as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())

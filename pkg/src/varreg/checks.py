"""Invariant checks run by ``varreg verify``.

Each check returns a :class:`CheckResult` whose ``value`` is compared against
``limit`` (smaller is better unless noted in ``detail``).
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass

import numpy as np

from .bounds import (
    c_center,
    check_tangency,
    extremal_identity_residual,
    g_roots,
    path_bound,
    r_radius,
    schwarz_disk,
)
from .core import ClassParams, as_complex, validate_params
from .extremal import ExtremalSpec, degenerate_value, dlog_H, h_log_integrand, log_H_batch
from .quadrature import DEFAULT_TOL, radial_path
from .region import (
    boundary_curve,
    contains,
    hausdorff,
    is_convex,
    is_simple,
    signed_margin,
    uniform_thetas,
    OUTSIDE,
)
from .samplers import log_f_batch, random_members

TRAPEZOID_STEPS = 10 ** 6


@dataclass
class CheckResult:
    name: str
    passed: bool
    value: float
    limit: float
    detail: str = ""
    seconds: float = 0.0

    def __post_init__(self):
        # numpy scalars are not JSON serializable
        self.passed = bool(self.passed)
        self.value = float(self.value)
        self.limit = float(self.limit)

    def as_dict(self):
        return asdict(self)


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        out = fn(*args, **kwargs)
        elapsed = time.perf_counter() - start
        for r in out if isinstance(out, list) else [out]:
            r.seconds = elapsed
        return out
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def trapezoid_log_H(params: ClassParams, a: complex, z0, steps: int = TRAPEZOID_STEPS,
                    chunk: int = 2 ** 17) -> complex:
    """Brute-force composite trapezoid for ``log H_{a,lam}(z0)`` on the segment."""
    z0 = as_complex(z0)
    spec = ExtremalSpec(params, a)
    total = 0j
    for lo in range(0, steps + 1, chunk):
        k = np.arange(lo, min(lo + chunk, steps + 1))
        w = np.where((k == 0) | (k == steps), 0.5, 1.0)
        total += np.sum(w * h_log_integrand(spec, z0 * k / steps))
    return complex(params.scale * total * z0 / steps)


@_timed
def check_shape(curve, tol: float = 1e-9) -> list[CheckResult]:
    poly = curve.polygon()
    report = is_convex(poly, tol)
    simple = is_simple(poly)
    return [
        CheckResult("convex", report.convex, max(0.0, -report.worst_value), tol,
                    f"worst cross product at vertex {report.worst_index}"),
        CheckResult("simple", simple, 0.0 if simple else 1.0, 0.0),
    ]


def check_singleton(params: ClassParams, z0, n: int = 64, tol: float = DEFAULT_TOL) -> CheckResult:
    """Spread of ``log H`` over ``theta`` against the degenerate value."""
    start = time.perf_counter()
    z0 = as_complex(z0)
    w0 = degenerate_value(params, z0)
    w, _ = log_H_batch(params, np.exp(1j * uniform_thetas(n)), z0, tol)
    spread = float(np.max(np.abs(w - w0)))
    limit = 1e-9 * (1 + abs(w0))
    return CheckResult("singleton", spread < limit, spread, limit,
                       seconds=time.perf_counter() - start)


@_timed
def check_interior(curve) -> CheckResult:
    poly = curve.polygon()
    w0 = degenerate_value(curve.params, curve.z0)
    margin = float(signed_margin(poly, w0)[0]) / poly.diameter
    return CheckResult("interior_point", margin > 1e-6, margin, 1e-6,
                       "relative margin, larger is better")


def _random_disk_points(rng, count, rmax=0.99):
    return rmax * np.sqrt(rng.random(count)) * np.exp(2j * np.pi * rng.random(count))


@_timed
def check_pointwise(params: ClassParams, count: int = 50, seed: int = 0,
                    tol: float = 1e-10) -> list[CheckResult]:
    """Schwarz disk containment, radius attainment and the extremal identity."""
    rng = np.random.default_rng(seed)
    zs = _random_disk_points(rng, count)
    inside = attain = ident = 0.0
    for z in zs:
        disk = schwarz_disk(params, z)
        a = complex(np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random()))
        inside = max(inside, float(disk.excess(dlog_H(ExtremalSpec(params, a), z))) / disk.radius)
        theta = float(2 * np.pi * rng.random() - np.pi)
        ctx = g_roots(theta, params)
        attain = max(attain, abs(float(disk.excess(dlog_H(ctx.spec, z)))) / disk.radius)
        ident = max(ident, extremal_identity_residual(ctx, z) / disk.radius)
    return [
        CheckResult("schwarz_disk", inside <= tol, inside, tol, "relative excess"),
        CheckResult("radius_attained", attain <= tol, attain, tol),
        CheckResult("extremal_identity", ident < tol, ident, tol),
    ]


@_timed
def check_path_bound(curve, slack: float = 1e-8) -> CheckResult:
    disk = path_bound(curve.params, radial_path(curve.z0))
    excess = float(np.max(disk.excess(curve.w))) / max(disk.radius, 1e-300)
    return CheckResult("radial_path_bound", excess <= slack, excess, slack, "relative excess")


@_timed
def check_tangency_sweep(params: ClassParams, z0, count: int = 16,
                         tol: float = 1e-6) -> list[CheckResult]:
    worst_res = worst_dir = 0.0
    for theta in uniform_thetas(count):
        report = check_tangency(g_roots(theta, params), z0, tol)
        worst_res = max(worst_res, report.relative_residual)
        worst_dir = max(worst_dir, report.direction_error)
    return [
        CheckResult("tangency_residual", worst_res < tol, worst_res, tol),
        CheckResult("tangency_direction", worst_dir < tol, worst_dir, tol),
    ]


@_timed
def check_containment(curve, count: int = 200, seed: int = 0, band: float = 1e-6,
                      max_degree: int = 4) -> CheckResult:
    members = random_members(seed, curve.params, count, max_degree)
    values, _ = log_f_batch(members, curve.z0, curve.tol)
    labels = contains(curve.polygon(), values, band)
    outsiders = int(np.sum(labels == OUTSIDE))
    return CheckResult("sampler_containment", outsiders == 0, float(outsiders), 0.0,
                       f"{count} members, seed {seed}")


@_timed
def check_trapezoid(params: ClassParams, z0, thetas=(0.0, np.pi / 2, np.pi),
                    rel: float = 1e-6, steps: int = TRAPEZOID_STEPS) -> CheckResult:
    a = np.exp(1j * np.asarray(thetas, dtype=float))
    adaptive, _ = log_H_batch(params, a, z0)
    worst = 0.0
    for ak, wk in zip(a, adaptive):
        brute = trapezoid_log_H(params, complex(ak), z0, steps)
        worst = max(worst, abs(wk - brute) / max(abs(brute), 1e-300))
    return CheckResult("trapezoid_oracle", worst < rel, worst, rel)


def lambda_zero_center(z):
    """Closed-form centre for ``lam = 0``: ``(|z|^2 conj(z) - 1) / ((1-z)(1-|z|^4))``."""
    z = np.asarray(z, dtype=complex)
    zz = np.abs(z) ** 2
    return (zz * np.conj(z) - 1) / ((1 - z) * (1 - zz * zz))


def lambda_zero_radius(z):
    """Closed-form radius for ``lam = 0``: ``|z| / (1 - |z|^4)``."""
    z = np.asarray(z, dtype=complex)
    return np.abs(z) / (1 - np.abs(z) ** 4)


@_timed
def check_lambda_zero(count: int = 1000, seed: int = 0, tol: float = 1e-12) -> CheckResult:
    rng = np.random.default_rng(seed)
    z = _random_disk_points(rng, count, 0.95)
    dc = np.abs(c_center(z, 0j) - lambda_zero_center(z)) / np.maximum(1, np.abs(lambda_zero_center(z)))
    dr = np.abs(r_radius(z, 0j) - lambda_zero_radius(z)) / np.maximum(1, lambda_zero_radius(z))
    worst = float(max(dc.max(), dr.max()))
    return CheckResult("lambda_zero_closed_form", worst < tol, worst, tol)


@_timed
def check_refinement(params: ClassParams, z0, fine=None, coarse_n: int = 256,
                     fine_n: int = 512, rel: float = 1e-3, tol: float = DEFAULT_TOL) -> CheckResult:
    if fine is None:
        fine = boundary_curve(params, z0, fine_n, tol)
    coarse = boundary_curve(params, z0, coarse_n, tol)
    p = fine.polygon()
    h = hausdorff(coarse.polygon(), p) / p.diameter
    return CheckResult("refinement", h < rel, h, rel, f"n={coarse_n} vs n={len(fine)}")


def run_suite(params: ClassParams, z0, *, quick: bool = False, n: int = 512,
              tol: float = DEFAULT_TOL, seed: int = 0) -> list[CheckResult]:
    """All invariants for one parameter set; ``quick`` trims counts and skips brute force."""
    problem = validate_params(params, z0, warn=False)
    z0 = problem.z0
    results = []
    if params.lam == 0:
        results.append(check_lambda_zero())
    if problem.singleton:
        results.append(check_singleton(params, z0, tol=tol))
        return results
    start = time.perf_counter()
    curve = boundary_curve(params, z0, n, tol)
    build = time.perf_counter() - start
    shape = check_shape(curve)
    for r in shape:
        r.seconds += build
    results += shape
    results.append(check_interior(curve))
    results += check_pointwise(params, 10 if quick else 50, seed)
    results.append(check_path_bound(curve))
    results += check_tangency_sweep(params, z0, 2 if quick else 16)
    results.append(check_containment(curve, 20 if quick else 200, seed))
    if not quick:
        results.append(check_trapezoid(params, z0))
    results.append(check_refinement(params, z0, curve, coarse_n=n // 2, fine_n=n, tol=tol))
    return results

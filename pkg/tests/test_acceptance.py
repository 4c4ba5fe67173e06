"""Acceptance criteria, one test per criterion.

Each test prints a single ``[ACCEPT n] PASS|FAIL ...`` line.  Run the file
directly (``python tests/test_acceptance.py``) for the same lines without pytest.
"""
import cmath
import sys
import time

import numpy as np
import pytest

from varreg.bounds import (
    c_center,
    check_tangency,
    extremal_identity_residual,
    g_roots,
    path_bound,
    r_radius,
    schwarz_disk,
)
from varreg.core import ClassParams
from varreg.extremal import ExtremalSpec, degenerate_value, dlog_H, h_log_integrand, log_H_batch
from varreg.presets import PRESETS
from varreg.quadrature import radial_path
from varreg.region import (
    boundary_curve,
    contains,
    hausdorff,
    is_convex,
    is_simple,
    signed_margin,
    uniform_thetas,
)
from varreg.samplers import log_f_batch, random_members

from oracles import disk_points, trapezoid_segment

SEED = 20240611
_CURVES = {}


def curve512(pid):
    if pid not in _CURVES:
        p = PRESETS[pid]
        t0 = time.perf_counter()
        curve = boundary_curve(p.params, p.z0, 512, 1e-10)
        _CURVES[pid] = (curve, time.perf_counter() - t0)
    return _CURVES[pid]


def criterion_1():
    worst_cross, slowest, bad = np.inf, 0.0, []
    for pid in PRESETS:
        curve, seconds = curve512(pid)
        poly = curve.polygon()
        report = is_convex(poly, 1e-9)
        ok = report.convex and is_simple(poly) and len(curve) == 512 and seconds < 2.0
        worst_cross = min(worst_cross, report.worst_value)
        slowest = max(slowest, seconds)
        if not ok:
            bad.append(pid)
    return not bad, (f"12 presets convex+simple at n=512; min cross/D^2={worst_cross:.2e}, "
                     f"slowest {slowest:.3f}s (target 2s); failing {bad or 'none'}")


def criterion_2():
    worst = 0.0
    a = np.exp(1j * uniform_thetas(512))
    for pid, p in PRESETS.items():
        for phi in np.arange(8) * np.pi / 4 - np.pi:
            params = ClassParams(p.mu, cmath.exp(1j * phi))
            w0 = degenerate_value(params, p.z0)
            vals, _ = log_H_batch(params, a, p.z0)
            worst = max(worst, np.max(np.abs(vals - w0)) / (1e-9 * (1 + abs(w0))))
            curve = boundary_curve(params, p.z0)
            assert curve.singleton and curve.w[0] == w0
        vals, _ = log_H_batch(p.params, a, 0)
        worst = max(worst, np.max(np.abs(vals)) / 1e-9)
        assert boundary_curve(p.params, 0).singleton
    return worst < 1, f"max spread / (1e-9 (1+|w0|)) = {worst:.2e} over 12 presets x (8 phi + z0=0)"


def criterion_3():
    margins = {}
    for pid in PRESETS:
        curve, _ = curve512(pid)
        poly = curve.polygon()
        w0 = degenerate_value(curve.params, curve.z0)
        margins[pid] = signed_margin(poly, w0)[0] / poly.diameter
    worst = min(margins, key=margins.get)
    return margins[worst] > 1e-6, f"min interior margin {margins[worst]:.3e} D ({worst}), need > 1e-6 D"


def criterion_4():
    rng = np.random.default_rng(SEED)
    excess = attain = ident = 0.0
    for p in PRESETS.values():
        for z in disk_points(rng, 50, 0.99):
            disk = schwarz_disk(p.params, z)
            a = np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
            excess = max(excess, disk.excess(dlog_H(ExtremalSpec(p.params, a), z)) / disk.radius)
            ctx = g_roots(rng.uniform(-np.pi, np.pi), p.params)
            attain = max(attain, abs(disk.excess(dlog_H(ctx.spec, z))) / disk.radius)
            ident = max(ident, extremal_identity_residual(ctx, z) / disk.radius)
    ok = excess <= 1e-10 and attain <= 1e-10 and ident < 1e-10
    return ok, (f"disk excess {excess:.2e}, radius attainment {attain:.2e}, "
                f"identity residual {ident:.2e} (all relative, need <= 1e-10)")


def criterion_5():
    worst, where = -np.inf, None
    for pid in PRESETS:
        curve, _ = curve512(pid)
        disk = path_bound(curve.params, radial_path(curve.z0))
        rel = np.max(disk.excess(curve.w)) / disk.radius
        if rel > worst:
            worst, where = rel, pid
    return worst <= 1e-8, f"max vertex excess over radial disk {worst:.2e} x radius ({where}), slack 1e-8"


def criterion_6():
    res = direction = 0.0
    for p in PRESETS.values():
        for theta in uniform_thetas(16):
            report = check_tangency(g_roots(theta, p.params), p.z0)
            res = max(res, report.relative_residual)
            direction = max(direction, report.direction_error)
    return res < 1e-6 and direction < 1e-6, (
        f"192 tangency checks: max relative residual {res:.2e}, max direction error {direction:.2e}")


def criterion_7():
    total = 0
    closest = np.inf
    for pid, p in PRESETS.items():
        curve, _ = curve512(pid)
        poly = curve.polygon()
        vals, _ = log_f_batch(random_members(SEED, p.params, 200), p.z0)
        total += int(np.sum(contains(poly, vals, 1e-6) == "outside"))
        closest = min(closest, np.min(signed_margin(poly, vals)) / poly.diameter)
    return total == 0, f"2400 members, {total} outside the 1e-6 D band; closest margin {closest:.2e} D"


def criterion_8():
    worst = 0.0
    for pid in ("1L", "3L", "6R"):
        p = PRESETS[pid]
        thetas = np.array([0.0, np.pi / 2, np.pi])
        adaptive, _ = log_H_batch(p.params, np.exp(1j * thetas), p.z0)
        for theta, value in zip(thetas, adaptive):
            spec = ExtremalSpec.on_circle(p.params, theta)
            brute = p.params.scale * trapezoid_segment(lambda z: h_log_integrand(spec, z), p.z0)
            worst = max(worst, abs(value - brute) / abs(brute))
    return worst < 1e-6, f"max relative gap to 1e6-step trapezoid {worst:.2e} (1L, 3L, 6R x 3 theta)"


def criterion_9():
    rng = np.random.default_rng(SEED)
    z = disk_points(rng, 1000, 0.99)
    zz = np.abs(z) ** 2
    center = (zz * np.conj(z) - 1) / ((1 - z) * (1 - zz ** 2))
    radius = np.abs(z) / (1 - zz ** 2)
    dc = np.max(np.abs(c_center(z, 0) - center) / np.maximum(1, np.abs(center)))
    dr = np.max(np.abs(r_radius(z, 0) - radius) / np.maximum(1, radius))
    return max(dc, dr) < 1e-12, f"centre gap {dc:.2e}, radius gap {dr:.2e} on 1000 points (need < 1e-12)"


def criterion_10():
    worst, where = 0.0, None
    for pid, p in PRESETS.items():
        fine, _ = curve512(pid)
        coarse = boundary_curve(p.params, p.z0, 256, 1e-10)
        h = hausdorff(coarse.polygon(), fine.polygon()) / fine.polygon().diameter
        if h > worst:
            worst, where = h, pid
    return worst < 1e-3, f"max Hausdorff(n=256, n=512) {worst:.2e} D ({where}), need < 1e-3 D"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def report(n, ok, text):
    print(f"[ACCEPT {n:2d}] {'PASS' if ok else 'FAIL'}  {text}", flush=True)


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    ok, text = CRITERIA[n - 1]()
    with capsys.disabled():
        print()
        report(n, ok, text)
    assert ok, text


if __name__ == "__main__":
    failures = 0
    for n, fn in enumerate(CRITERIA, 1):
        ok, text = fn()
        report(n, ok, text)
        failures += not ok
    sys.exit(1 if failures else 0)

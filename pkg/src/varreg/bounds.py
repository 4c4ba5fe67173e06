"""Disk bounds from the Schwarz lemma and the extremal path through ``G``.

Pointwise, ``f'/f`` of every class member lies in the closed disk with centre
``(mu/pi) c(z, lam)`` and radius ``(|mu|/pi) r(z, lam)``; integrating along a
path from 0 to ``z0`` bounds ``log f(z0)``.  Along the path ``gamma0`` on which
``G(z(t)) = t^2 G(z0)`` the bound touches the region at the boundary point for
the same ``theta``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import ClassParams, as_complex
from .errors import BranchAmbiguity, ContinuationError, ContinuationStall
from .extremal import ExtremalSpec, dlog_H, log_H, quadratic
from .quadrature import (
    DEFAULT_TOL,
    PathSpec,
    QuadratureResult,
    hermite_eval,
    integrate_path,
    integrate_segment,
    integrate_segments,
    newton_continue,
)


@dataclass(frozen=True)
class DiskBound:
    center: complex
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")

    def excess(self, w) -> np.ndarray:
        """``|w - center| - radius``; positive outside the disk."""
        return np.abs(np.asarray(w) - self.center) - self.radius

    def contains(self, w, slack: float = 0.0) -> bool:
        """True if every ``w`` lies within ``radius + slack`` of the centre."""
        return bool(np.all(self.excess(w) <= slack))


def c_center(z, lam):
    """Centre function ``c(z, lam)`` of the pointwise disk (before ``mu/pi``)."""
    z = np.asarray(z, dtype=complex)
    zz = np.abs(z) ** 2
    lamc = np.conj(lam)
    num = zz * (np.conj(z) - lam) * (1 - lamc) - (1 - lam) * (1 - lamc * np.conj(z))
    den = (1 - z) * (1 - zz) * (1 + zz - 2 * (lam * z).real)
    out = num / den
    return complex(out) if out.ndim == 0 else out


def r_radius(z, lam):
    """Radius function ``r(z, lam)`` of the pointwise disk (before ``|mu|/pi``)."""
    z = np.asarray(z, dtype=complex)
    zz = np.abs(z) ** 2
    out = (1 - abs(lam) ** 2) * np.abs(z) / ((1 - zz) * (1 + zz - 2 * (lam * z).real))
    return float(out) if out.ndim == 0 else out


def schwarz_disk(params: ClassParams, z) -> DiskBound:
    """Disk containing ``f'(z)/f(z)`` for every member ``f``."""
    z = as_complex(z)
    return DiskBound(params.scale * c_center(z, params.lam),
                     params.abs_scale * r_radius(z, params.lam))


def path_integrals(params: ClassParams, path: PathSpec, tol: float = DEFAULT_TOL):
    """``C(lam, path)`` and ``R(lam, path)`` as quadrature results (no ``mu`` factor)."""
    lam = params.lam
    C = integrate_path(lambda z, dz: c_center(z, lam) * dz, path, tol)
    R = integrate_path(lambda z: r_radius(z, lam), path, tol, mode="modulus")
    return C, R


def path_bound(params: ClassParams, path: PathSpec, tol: float = DEFAULT_TOL) -> DiskBound:
    """Disk containing the whole region, obtained by integrating along ``path``."""
    path.check_origin_path()
    if np.all(path.z == 0):
        return DiskBound(0j, 0.0)
    C, R = path_integrals(params, path, tol)
    return DiskBound(params.scale * C.value, params.abs_scale * R.value.real)


# --- the auxiliary function G --------------------------------------------------

@dataclass(frozen=True)
class GContext:
    """``theta``, the class parameters and the unimodular roots of the quadratic."""

    theta: float
    params: ClassParams
    b: float
    z1: complex
    z2: complex

    @property
    def a(self) -> complex:
        return cmath.exp(1j * self.theta)

    @property
    def spec(self) -> ExtremalSpec:
        return ExtremalSpec(self.params, self.a)


def g_roots(theta: float, params: ClassParams) -> GContext:
    """Roots ``z1, z2`` of ``1 + (conj(lam) e^{i theta} - lam) z - e^{i theta} z^2``.

    With ``b = Im(conj(lam) e^{i theta/2})``,
    ``z1,2 = e^{-i theta/2} (i b +- sqrt(1 - b^2))``; both lie on the unit circle.
    """
    theta = float(theta)
    half = cmath.exp(0.5j * theta)
    b = (params.lam.conjugate() * half).imag
    s = math.sqrt(max(0.0, 1.0 - b * b))
    return GContext(theta, params, b, (1j * b + s) / half, (1j * b - s) / half)


def _g_integrand(ctx: GContext):
    a, lam = ctx.a, ctx.params.lam
    return lambda zeta: zeta / quadratic(a, lam, zeta) ** 2


def G_prime(ctx: GContext, z):
    """Closed-form ``G'(z) = (mu/pi) e^{i theta} z / q(z)^2``."""
    return ctx.params.scale * ctx.a * z / quadratic(ctx.a, ctx.params.lam, z) ** 2


def starlike_margin(ctx: GContext, z):
    """``Re(1 + z G''(z) / G'(z))`` from the closed form of ``G'``."""
    a, lam = ctx.a, ctx.params.lam
    q = quadratic(a, lam, z)
    dq = (np.conj(lam) * a - lam) - 2 * a * z
    return (2 - 2 * z * dq / q).real


def _normalized_G(ctx: GContext, z, tol: float) -> QuadratureResult:
    # G = (mu/pi) e^{i theta} F with F(z) = int_0^z zeta / q(zeta)^2
    return integrate_segment(_g_integrand(ctx), as_complex(z), tol)


def G_eval(ctx: GContext, z, tol: float = DEFAULT_TOL) -> complex:
    """``G(z)`` by segment quadrature; ``tol`` applies before the prefactor."""
    return ctx.params.scale * ctx.a * _normalized_G(ctx, z, tol).value


def extremal_identity_residual(ctx: GContext, z) -> float:
    """``|H'/H - (mu/pi) c - (|mu|/pi) r G'/|G'||`` at ``z`` for ``a = e^{i theta}``."""
    z = as_complex(z)
    p = ctx.params
    lhs = dlog_H(ctx.spec, z) - p.scale * c_center(z, p.lam)
    gp = G_prime(ctx, z)
    rhs = p.abs_scale * r_radius(z, p.lam) * gp / abs(gp)
    return abs(lhs - rhs)


# --- the extremal path gamma0 --------------------------------------------------

GAMMA0_NODES = 257
GAMMA0_TMIN = 1e-3


def _locator(ctx: GContext, tn, zn, dzn, F0: complex, rel_tol: float):
    """Exact evaluation of gamma0 between nodes by Newton on ``F(z) = t^2 F0``."""
    fz = _g_integrand(ctx)
    a, lam = ctx.a, ctx.params.lam

    def locate(t):
        t = np.asarray(t, dtype=float)
        shape = t.shape
        t = t.ravel()
        z, _ = hermite_eval(tn, zn, dzn, t)
        k = np.clip(np.searchsorted(tn, t, side="right") - 1, 0, tn.size - 2)
        base, goal = zn[k], t * t * F0
        # F(z_k) = t_k^2 F0 at the nodes
        base_val = tn[k] ** 2 * F0
        atol = rel_tol * np.maximum(np.abs(goal), 1e-300)
        qtol = 1e-3 * max(float(atol.min()), 1e-300)
        for _ in range(25):
            inc, _, _ = integrate_segments(fz, base, z, qtol)
            res = base_val + inc - goal
            if np.all(np.abs(res) <= atol):
                break
            z = z - res / (z / quadratic(a, lam, z) ** 2)
        else:
            raise ContinuationStall("gamma0 locator did not converge")
        fp = z / quadratic(a, lam, z) ** 2
        with np.errstate(invalid="ignore", divide="ignore"):
            dz = np.where(t > 0, 2 * t * F0 / fp, dzn[0])
        z = np.where(t > 0, z, 0j)
        return z.reshape(shape), dz.reshape(shape)

    return locate


def gamma0_path(ctx: GContext, z0, n: int = GAMMA0_NODES, *, t_min: float = GAMMA0_TMIN,
                rel_tol: float = 1e-10) -> PathSpec:
    """Trace ``gamma0: G(z(t)) = t^2 G(z0)`` from 0 to ``z0``.

    Near ``t = 0`` the path behaves like ``t G0(z0)`` with ``G0(z0)^2 = 2 F(z0)``;
    both square roots are tried as starting points and the one whose
    continuation stays in the disk and ends at ``z0`` is kept.
    """
    z0 = as_complex(z0)
    if z0 == 0:
        raise ValueError("gamma0 needs z0 != 0")
    if ctx.params.boundary_lambda:
        raise ValueError("gamma0 needs |lambda| < 1")
    fz = _g_integrand(ctx)
    a, lam = ctx.a, ctx.params.lam
    F0 = _normalized_G(ctx, z0, 1e-16).value
    qtol = 1e-4 * rel_tol * abs(F0)

    def target(z):
        return integrate_segment(fz, z, qtol).value

    def target_prime(z):
        return z / quadratic(a, lam, z) ** 2

    grid = np.concatenate([[t_min], np.arange(1, n) / (n - 1)])
    root = cmath.sqrt(2 * F0)
    failures = []
    for g0 in (root, -root):
        try:
            track = newton_continue(target, lambda t: t * t * F0, t_min * g0, grid,
                                    target_prime=target_prime,
                                    rhs_prime=lambda t: 2 * t * F0,
                                    rel_tol=rel_tol, kind="gamma0")
        except ContinuationError as exc:
            failures.append(f"start {g0:.6g}: {exc}")
            continue
        if abs(track.end - z0) > 1e-10:
            failures.append(f"start {g0:.6g}: ended at {track.end:.12g}")
            continue
        tn = np.concatenate([[0.0], track.t[1:]])
        zn = np.concatenate([[0j], track.z[1:]])
        dzn = np.concatenate([[g0], track.dz[1:]])
        locate = _locator(ctx, tn, zn, dzn, F0, 1e-12)
        return PathSpec(tn, zn, dzn, "gamma0", locate)
    raise BranchAmbiguity("; ".join(failures))


@dataclass(frozen=True)
class TangencyReport:
    theta: float
    boundary_point: complex
    center: complex
    radius: float
    G_z0: complex
    residual: complex
    relative_residual: float
    modulus_gap: float
    direction_error: float

    def ok(self, tol: float = 1e-6) -> bool:
        return self.relative_residual < tol and self.direction_error < tol


def check_tangency(ctx: GContext, z0, tol: float = 1e-6,
                   quad_tol: float = DEFAULT_TOL) -> TangencyReport:
    """Compare ``log H(z0) - (mu/pi) C(gamma0)`` with ``G(z0)/|G(z0)| (|mu|/pi) R(gamma0)``.

    The relative residual is taken against the radius ``(|mu|/pi) R``.
    ``tol`` only feeds :meth:`TangencyReport.ok`.
    """
    z0 = as_complex(z0)
    p = ctx.params
    path = gamma0_path(ctx, z0)
    C, R = path_integrals(p, path, quad_tol)
    center = p.scale * C.value
    radius = p.abs_scale * R.value.real
    w = log_H(ctx.spec, z0, quad_tol)
    G0 = G_eval(ctx, z0, 1e-16)
    lhs = w - center
    phase = G0 / abs(G0)
    residual = lhs - phase * radius
    return TangencyReport(
        theta=ctx.theta,
        boundary_point=w,
        center=center,
        radius=radius,
        G_z0=G0,
        residual=residual,
        relative_residual=abs(residual) / radius,
        modulus_gap=abs(abs(lhs) - radius),
        direction_error=abs(lhs / abs(lhs) - phase),
    )

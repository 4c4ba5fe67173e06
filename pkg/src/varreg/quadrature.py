"""Adaptive complex line integrals and predictor-corrector path tracking.

The integration rule everywhere is a G10/K21 Gauss-Kronrod pair with local
bisection: a panel of parameter width ``w`` is accepted once
``|K21 - G10| <= tol * w`` (so accepted errors sum to at most ``tol``) or the
difference is at roundoff level.  Integrands are called with numpy arrays.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ._pykernels import adapt_batch
from .errors import ContinuationStall, InvalidPath, LeftDisk, NoConvergence

DEFAULT_TOL = 1e-10
MAX_PANELS = 2 ** 15


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    err_estimate: float
    evaluations: int

    def scaled(self, factor: complex) -> "QuadratureResult":
        """Multiply the value by ``factor`` and the error bound by ``|factor|``."""
        return QuadratureResult(self.value * factor, self.err_estimate * abs(factor),
                                self.evaluations)


def integrate_segments(f, starts, ends, tol: float = DEFAULT_TOL,
                       max_panels: int = MAX_PANELS):
    """Vectorized :func:`integrate_segment` over many segments.

    ``f`` is called with a 2-D array of points; every segment uses the same
    integrand.  Returns ``(values, errors, evaluations)`` arrays.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    vals, errs, panels, status = adapt_batch(lambda _items, zeta: f(zeta),
                                             starts, ends, tol, max_panels)
    if status.any():
        bad = int(np.flatnonzero(status)[0])
        raise NoConvergence(f"segment {bad}: panel budget {max_panels} exhausted "
                            f"(error estimate {errs[bad]:.3g})")
    return vals, errs, 21 * panels


def integrate_segment(f: Callable, z_end: complex, tol: float = DEFAULT_TOL,
                      z_start: complex = 0j, max_panels: int = MAX_PANELS) -> QuadratureResult:
    """Integrate ``f(zeta) d zeta`` along the straight segment ``[z_start, z_end]``.

    The segment is parametrized by its arclength fraction ``s`` in [0, 1].
    Raises :class:`NoConvergence` when the panel budget is exhausted, which in
    practice means the segment passes too close to a singularity.
    """
    vals, errs, evals = integrate_segments(f, [z_start], [z_end], tol, max_panels)
    return QuadratureResult(complex(vals[0]), float(errs[0]), int(evals[0]))


@dataclass
class PathSpec:
    """Samples ``(t, z(t), z'(t))`` of a C1 curve in the unit disk.

    ``locate`` optionally evaluates the exact curve at arbitrary parameters
    (vectorized, returning ``(z, dz)``); without it, points between nodes
    come from cubic Hermite interpolation of the node data.
    """

    t: np.ndarray
    z: np.ndarray
    dz: np.ndarray
    kind: str = "custom"
    locate: Optional[Callable] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.t = np.asarray(self.t, dtype=float)
        self.z = np.asarray(self.z, dtype=complex)
        self.dz = np.asarray(self.dz, dtype=complex)
        if not (self.t.ndim == 1 and self.t.shape == self.z.shape == self.dz.shape):
            raise InvalidPath("t, z and dz must be 1-D arrays of equal length")
        if self.t.size < 2:
            raise InvalidPath("a path needs at least two nodes")
        if np.any(np.diff(self.t) <= 0):
            raise InvalidPath("t must be strictly increasing")
        if self.t[0] < 0 or self.t[-1] > 1:
            raise InvalidPath("t must lie in [0, 1]")
        if not (np.all(np.isfinite(self.z)) and np.all(np.isfinite(self.dz))):
            raise InvalidPath("non-finite path samples")
        if np.any(np.abs(self.z) >= 1):
            raise InvalidPath("path leaves the unit disk")

    def __len__(self):
        return self.t.size

    @property
    def start(self) -> complex:
        return complex(self.z[0])

    @property
    def end(self) -> complex:
        return complex(self.z[-1])

    def check_origin_path(self) -> None:
        """Raise unless the path runs over t in [0, 1] from 0."""
        if self.t[0] != 0 or self.t[-1] != 1:
            raise InvalidPath("path must be parametrized over [0, 1]")
        if self.z[0] != 0:
            raise InvalidPath("path must start at the origin")

    def evaluate(self, t):
        """Return ``(z(t), z'(t))`` at parameters ``t`` (any shape)."""
        t = np.asarray(t, dtype=float)
        if self.locate is not None:
            return self.locate(t)
        return hermite_eval(self.t, self.z, self.dz, t)

    def refined(self, factor: int = 2) -> "PathSpec":
        """The same curve resampled with ``factor`` times as many panels."""
        m = (self.t.size - 1) * factor
        t = np.interp(np.arange(m + 1) / m, np.linspace(0, 1, self.t.size), self.t)
        z, dz = self.evaluate(t)
        z[0], z[-1] = self.z[0], self.z[-1]
        return PathSpec(t, z, dz, self.kind, self.locate)


def hermite_eval(tn, zn, dzn, t):
    """Piecewise cubic Hermite interpolation of a curve and its derivative."""
    k = np.clip(np.searchsorted(tn, t, side="right") - 1, 0, tn.size - 2)
    h = tn[k + 1] - tn[k]
    u = (t - tn[k]) / h
    z0, z1 = zn[k], zn[k + 1]
    m0, m1 = dzn[k] * h, dzn[k + 1] * h
    h00 = 2 * u**3 - 3 * u**2 + 1
    h10 = u**3 - 2 * u**2 + u
    h01 = -2 * u**3 + 3 * u**2
    h11 = u**3 - u**2
    z = h00 * z0 + h10 * m0 + h01 * z1 + h11 * m1
    dz = ((6 * u**2 - 6 * u) * z0 + (3 * u**2 - 4 * u + 1) * m0
          + (-6 * u**2 + 6 * u) * z1 + (3 * u**2 - 2 * u) * m1) / h
    return z, dz


def radial_path(z0: complex, n: int = 2) -> PathSpec:
    """The segment ``z(t) = t z0``; exact at every parameter."""
    z0 = complex(z0)
    t = np.linspace(0.0, 1.0, max(int(n), 2))

    def locate(tt):
        tt = np.asarray(tt, dtype=float)
        return tt * z0, np.full(tt.shape, z0, dtype=complex)

    z, dz = locate(t)
    return PathSpec(t, z, dz, "radial", locate)


def integrate_path(f: Callable, path: PathSpec, tol: float = DEFAULT_TOL,
                   mode: str = "value", max_panels: int = MAX_PANELS) -> QuadratureResult:
    """Composite adaptive quadrature over the panels of ``path``.

    ``mode="value"``: integrates ``f(z, dz)`` dt, so ``f = lambda z, dz: g(z) * dz``
    gives the contour integral of ``g``.  ``mode="modulus"``: integrates
    ``f(z) * |dz|`` dt (arclength-weighted).  Each panel between consecutive
    nodes is refined independently with tolerance proportional to its width.
    """
    if mode not in ("value", "modulus"):
        raise ValueError(f"unknown mode {mode!r}")

    def g(tt):
        tt = tt.real
        z, dz = path.evaluate(tt)
        if mode == "value":
            return f(z, dz)
        return f(z) * np.abs(dz)

    starts = path.t[:-1].astype(complex)
    ends = path.t[1:].astype(complex)
    panel_tol = tol * np.diff(path.t) / (path.t[-1] - path.t[0])
    vals, errs, panels, status = adapt_batch(lambda _i, tt: g(tt), starts, ends,
                                             panel_tol, max_panels)
    if status.any():
        raise NoConvergence("path quadrature exhausted its panel budget")
    return QuadratureResult(complex(vals.sum()), float(errs.sum()), int(21 * panels.sum()))


def _rk4_step(rhs_prime, target_prime, t0, z0, t1):
    def v(t, z):
        return rhs_prime(t) / target_prime(z)

    h = t1 - t0
    k1 = v(t0, z0)
    k2 = v(t0 + h / 2, z0 + h / 2 * k1)
    k3 = v(t0 + h / 2, z0 + h / 2 * k2)
    k4 = v(t1, z0 + h * k3)
    return z0 + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def newton_continue(target: Callable, rhs: Callable, start: complex, t_grid,
                    *, target_prime: Callable, rhs_prime: Callable,
                    rel_tol: float = 1e-10, max_newton: int = 25,
                    floor: float = 1e-8, kind: str = "custom") -> PathSpec:
    """Track ``z(t)`` with ``target(z(t)) = rhs(t)`` over ``t_grid``.

    ``start`` is a guess for ``z(t_grid[0])``; it is Newton-corrected before
    tracking begins.  Between grid points an RK4 step of
    ``z' = rhs'(t) / target'(z)`` predicts and Newton corrects until
    ``|target(z) - rhs(t)| <= rel_tol * max(|rhs(t)|, floor * S)`` where
    ``S = |rhs(t_grid[-1])|`` (or 1 when that vanishes).  The bound is relative
    per node so that targets vanishing at the start are tracked accurately.
    The derivative samples are ``rhs'(t) / target'(z(t))``.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    scale = abs(rhs(t_grid[-1])) or 1.0

    def correct(t, z):
        goal = rhs(t)
        atol = rel_tol * max(abs(goal), floor * scale)
        for _ in range(max_newton + 1):
            res = target(z) - goal
            if abs(res) <= atol:
                return z
            z = z - res / target_prime(z)
            if not abs(z) < 1:
                raise LeftDisk(f"continuation left the disk at t={t:.6g}")
        raise ContinuationStall(f"Newton did not converge at t={t:.6g} "
                                f"(residual {abs(res):.3g})")

    zs = np.empty(t_grid.size, dtype=complex)
    z = correct(t_grid[0], complex(start))
    zs[0] = z
    for k in range(1, t_grid.size):
        guess = _rk4_step(rhs_prime, target_prime, t_grid[k - 1], z, t_grid[k])
        if not abs(guess) < 1:
            raise LeftDisk(f"predictor left the disk at t={t_grid[k]:.6g}")
        z = correct(t_grid[k], guess)
        zs[k] = z
    dzs = np.array([rhs_prime(t) / target_prime(z) for t, z in zip(t_grid, zs)])
    return PathSpec(t_grid, zs, dzs, kind)

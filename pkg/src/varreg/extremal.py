"""The extremal family ``H_{a,lam}`` and its closed-form derivatives."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import ClassParams, DENOM_EPS, as_complex, mobius_delta
from .errors import DegenerateDenominator, NoConvergence
from .quadrature import DEFAULT_TOL, MAX_PANELS


@dataclass(frozen=True)
class ExtremalSpec:
    """``H_{a,lam}`` for ``|a| <= 1``; ``a = exp(i theta)`` traces the boundary."""

    params: ClassParams
    a: complex

    def __post_init__(self):
        a = as_complex(self.a)
        if abs(a) > 1 + 1e-12:
            raise ValueError(f"|a| must not exceed 1, got {abs(a)}")
        object.__setattr__(self, "a", a)

    @classmethod
    def on_circle(cls, params: ClassParams, theta: float) -> "ExtremalSpec":
        return cls(params, cmath.exp(1j * theta))


def quadratic(a, lam, z):
    """``1 + (conj(lam) a - lam) z - a z^2``, the factor carrying the roots z1, z2."""
    return 1 + (np.conj(lam) * a - lam) * z - a * z * z


def _extremal_ratio(a, lam, z):
    num = (lam - 1) + (1 - np.conj(lam)) * a * z
    den = (1 - z) * quadratic(a, lam, z)
    if np.any(np.abs(den) < DENOM_EPS):
        raise DegenerateDenominator("extremal integrand has a pole here")
    return num / den


def h_log_integrand(spec: ExtremalSpec, zeta):
    """Integrand of ``log H`` without the ``mu/pi`` factor.

    Uses the cleared-denominator form
    ``((lam-1) + (1-conj(lam)) a zeta) / ((1-zeta)(1 + (conj(lam) a - lam) zeta - a zeta^2))``.
    """
    return _extremal_ratio(spec.a, spec.params.lam, zeta)


def dlog_H(spec: ExtremalSpec, z):
    """``H'/H`` in closed form."""
    return spec.params.scale * _extremal_ratio(spec.a, spec.params.lam, z)


def omega_H(spec: ExtremalSpec, z):
    """Schwarz function of ``H_{a,lam}``: ``z * delta(a z, lam)``."""
    return z * mobius_delta(spec.a * z, spec.params.lam)


def p_H(spec: ExtremalSpec, z):
    """``P`` for ``H_{a,lam}``: ``(1 + omega) / (1 - omega)``."""
    w = omega_H(spec, z)
    return (1 + w) / (1 - w)


def log_H_batch(params: ClassParams, a, z0: complex, tol: float = DEFAULT_TOL,
                max_panels: int = MAX_PANELS):
    """``log H_{a,lam}(z0)`` for an array of ``a``.

    ``tol`` bounds the error of the integral before the ``mu/pi`` factor.
    Returns ``(values, error_bounds)`` where the bounds include that factor.
    """
    z0 = as_complex(z0)
    a = np.asarray(a, dtype=complex)
    if z0 == 0:
        return np.zeros(a.shape, dtype=complex), np.zeros(a.shape)
    vals, errs, _panels, status = kernels.extremal_batch(a.ravel(), params.lam, z0,
                                                         tol, max_panels)
    if np.any(status):
        raise NoConvergence(f"extremal quadrature failed for {int(np.sum(status))} "
                            f"parameter values (z0={z0})")
    return ((params.scale * vals).reshape(a.shape),
            (params.abs_scale * errs).reshape(a.shape))


def log_H(spec: ExtremalSpec, z0, tol: float = DEFAULT_TOL) -> complex:
    """``log H_{a,lam}(z0)`` on the branch vanishing at the origin."""
    vals, _errs = log_H_batch(spec.params, np.array([spec.a]), z0, tol)
    return complex(vals[0])


def degenerate_value(params: ClassParams, z0) -> complex:
    """``(mu/pi) (Log(1 - z0) - Log(1 - lam z0))`` with principal logarithms.

    This is the whole region when ``|lam| = 1`` or ``z0 = 0`` and an interior
    point of it otherwise.
    """
    z0 = as_complex(z0)
    u, v = 1 - z0, 1 - params.lam * z0
    # both factors sit in the right half-plane, so principal logs follow the
    # branch with log f(0) = 0 along the segment
    assert u.real > 0 and v.real > 0, "principal branch assumption violated"
    return params.scale * (cmath.log(u) - cmath.log(v))

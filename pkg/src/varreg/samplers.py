"""Members of the normalized class built from finite Blaschke products.

A generator ``psi(z) = s e^{i phi} z prod_k (z - alpha_k) / (1 - conj(alpha_k) z)``
with ``0 <= s <= 1`` is a self-map of the disk fixing 0, so
``omega(z) = z * delta(psi(z), lam)`` is a Schwarz function with
``omega'(0) = lam`` and ``P = (1 + omega) / (1 - omega)`` has positive real part.
The member itself is recovered from

    log f(z0) = (mu/pi) int_0^z0 (delta(psi) - 1) / ((1 - zeta delta(psi)) (1 - zeta)) d zeta,

which is ``(mu / 2 pi) int (P - (1+zeta)/(1-zeta)) d zeta / zeta`` with the
removable singularity at the origin cancelled algebraically.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import ClassParams, as_complex, mobius_delta
from .errors import NoConvergence
from .quadrature import DEFAULT_TOL, MAX_PANELS

MAX_DEGREE = 8
ZERO_RADIUS = 0.9


@dataclass(frozen=True)
class SchwarzGenerator:
    zeros: tuple[complex, ...] = ()
    rotation: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        zeros = tuple(as_complex(a) for a in self.zeros)
        if any(abs(a) >= 1 for a in zeros):
            raise ValueError("Blaschke zeros must lie in the open unit disk")
        if not 0 <= self.scale <= 1:
            raise ValueError("scale must lie in [0, 1]")
        object.__setattr__(self, "zeros", zeros)

    @property
    def leading(self) -> complex:
        return self.scale * cmath.exp(1j * self.rotation)

    @classmethod
    def linear(cls, a: complex) -> "SchwarzGenerator":
        """``psi(z) = a z``."""
        a = as_complex(a)
        return cls((), cmath.phase(a) if a else 0.0, abs(a))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.leading * z
        for alpha in self.zeros:
            out = out * (z - alpha) / (1 - np.conj(alpha) * z)
        return out


@dataclass(frozen=True)
class MemberFunction:
    params: ClassParams
    generator: SchwarzGenerator

    def omega(self, z):
        return z * mobius_delta(self.generator(z), self.params.lam)


def p_f(member: MemberFunction, z):
    """``(1 + omega_f) / (1 - omega_f)``; positive real part on the disk."""
    w = member.omega(z)
    return (1 + w) / (1 - w)


def _pack(members):
    k = max((len(m.generator.zeros) for m in members), default=0)
    zeros = np.zeros((len(members), k), dtype=complex)
    counts = np.zeros(len(members), dtype=np.int32)
    for i, m in enumerate(members):
        zs = m.generator.zeros
        zeros[i, :len(zs)] = zs
        counts[i] = len(zs)
    leading = np.array([m.generator.leading for m in members], dtype=complex)
    return zeros, counts, leading


def log_f_batch(members, z0, tol: float = DEFAULT_TOL, max_panels: int = MAX_PANELS):
    """``log f(z0)`` for members sharing one ``ClassParams``.

    Returns ``(values, error_bounds)``; bounds include the ``|mu|/pi`` factor.
    """
    members = list(members)
    z0 = as_complex(z0)
    if not members:
        return np.zeros(0, dtype=complex), np.zeros(0)
    params = members[0].params
    if any(m.params != params for m in members):
        raise ValueError("members must share class parameters")
    if z0 == 0:
        return np.zeros(len(members), dtype=complex), np.zeros(len(members))
    zeros, counts, leading = _pack(members)
    vals, errs, _panels, status = kernels.member_batch(zeros, counts, leading, params.lam,
                                                       z0, tol, max_panels)
    if np.any(status):
        raise NoConvergence("member quadrature exhausted its panel budget")
    return params.scale * vals, params.abs_scale * errs


def log_f(member: MemberFunction, z0, tol: float = DEFAULT_TOL) -> complex:
    vals, _ = log_f_batch([member], z0, tol)
    return complex(vals[0])


def random_member(seed: int, params: ClassParams, max_degree: int = 4) -> MemberFunction:
    """Pseudo-random member from numpy's PCG64 stream seeded with ``seed``.

    Draw order: degree uniform in ``1..max_degree``; then per zero a radius
    ``0.9 * sqrt(U)`` (uniform on the disk of radius 0.9) and a phase
    ``2 pi U``; finally the rotation ``2 pi U - pi``.
    """
    if not 1 <= max_degree <= MAX_DEGREE:
        raise ValueError(f"max_degree must be between 1 and {MAX_DEGREE}")
    rng = np.random.Generator(np.random.PCG64(seed))
    degree = int(rng.integers(1, max_degree + 1))
    zeros = []
    for _ in range(degree):
        radius = ZERO_RADIUS * np.sqrt(rng.random())
        zeros.append(complex(radius * np.exp(2j * np.pi * rng.random())))
    rotation = float(2 * np.pi * rng.random() - np.pi)
    return MemberFunction(params, SchwarzGenerator(tuple(zeros), rotation))


def random_members(seed: int, params: ClassParams, count: int,
                   max_degree: int = 4) -> list[MemberFunction]:
    """``count`` members; member ``i`` uses seed ``seed + i``."""
    return [random_member(seed + i, params, max_degree) for i in range(count)]

"""Scalar conventions, disk automorphisms and parameter validation.

Every function here accepts Python complex scalars or numpy arrays and
returns the same kind.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateDenominator,
    InvalidEvalPoint,
    InvalidLambda,
    InvalidMu,
    NearDegenerateWarning,
)

#: Denominators of Moebius maps smaller than this are treated as zero.
DENOM_EPS = 1e-14
#: |lambda| above this is flagged as effectively on the unit circle.
LAMBDA_EDGE = 1.0 - 1e-9
#: |z0| above this is flagged as close to the boundary of the disk.
Z0_EDGE = 0.999


def as_complex(value) -> complex:
    """Coerce ``value`` to a finite Python complex.

    Accepts numbers, ``(re, im)`` pairs and strings such as ``"0.3,-0.4"`` or
    ``"0.3-0.4j"``.
    """
    if isinstance(value, str):
        text = value.strip().replace(" ", "")
        if "," in text:
            re_s, im_s = text.split(",", 1)
            value = complex(float(re_s), float(im_s))
        else:
            value = complex(text.replace("i", "j"))
    elif isinstance(value, (tuple, list)):
        re_v, im_v = value
        value = complex(float(re_v), float(im_v))
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex value {z!r}")
    return z


def _check_denominator(den) -> None:
    if np.any(np.abs(den) < DENOM_EPS):
        raise DegenerateDenominator("Moebius denominator vanishes")


def mobius_delta(z, lam):
    """Disk automorphism ``(z + lam) / (1 + conj(lam) z)`` sending 0 to lam."""
    den = 1 + np.conj(lam) * z
    _check_denominator(den)
    return (z + lam) / den


def tau(z, lam):
    """``(z - conj(lam)) / (1 - lam z)``."""
    den = 1 - lam * z
    _check_denominator(den)
    return (z - np.conj(lam)) / den


@dataclass(frozen=True)
class ClassParams:
    """Parameters ``(mu, lam)`` of the normalized class.

    ``mu`` controls the spiral angle and must have positive real part;
    ``lam`` is the prescribed value of the Schwarz function's derivative at
    the origin and lies in the closed unit disk.
    """

    mu: complex
    lam: complex

    def __post_init__(self):
        object.__setattr__(self, "mu", as_complex(self.mu))
        object.__setattr__(self, "lam", as_complex(self.lam))

    @property
    def scale(self) -> complex:
        """The prefactor ``mu / pi`` multiplying every logarithmic integral."""
        return self.mu / math.pi

    @property
    def abs_scale(self) -> float:
        return abs(self.mu) / math.pi

    @property
    def boundary_lambda(self) -> bool:
        """True when ``|lam| = 1`` to within :data:`LAMBDA_EDGE`."""
        return abs(self.lam) > LAMBDA_EDGE


@dataclass(frozen=True)
class Problem:
    """A validated ``(params, z0)`` pair together with any regime warnings."""

    params: ClassParams
    z0: complex
    notes: tuple[str, ...] = field(default=())

    @property
    def singleton(self) -> bool:
        return self.z0 == 0 or self.params.boundary_lambda


def validate_params(params: ClassParams, z0, *, warn: bool = True) -> Problem:
    """Check ``Re mu > 0``, ``|lam| <= 1`` and ``|z0| < 1``.

    Near-degenerate but admissible inputs (``|lam|`` within 1e-9 of 1,
    ``|z0| > 0.999``) are accepted and reported both in ``Problem.notes`` and
    as :class:`NearDegenerateWarning`.
    """
    z0 = as_complex(z0)
    if not params.mu.real > 0:
        raise InvalidMu(f"Re(mu) must be positive, got mu={params.mu}")
    if abs(params.lam) > 1.0 + 1e-15:
        raise InvalidLambda(f"|lambda| must not exceed 1, got {abs(params.lam)}")
    if not abs(z0) < 1:
        raise InvalidEvalPoint(f"|z0| must be below 1, got {abs(z0)}")
    notes = []
    if LAMBDA_EDGE < abs(params.lam) < 1.0 - 1e-15:
        notes.append(f"|lambda|={abs(params.lam):.12g} treated as on the unit circle")
    if abs(z0) > Z0_EDGE:
        notes.append(f"|z0|={abs(z0):.12g} is close to the unit circle")
    if warn:
        for note in notes:
            warnings.warn(note, NearDegenerateWarning, stacklevel=2)
    return Problem(params, z0, tuple(notes))

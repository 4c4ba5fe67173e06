"""The twelve reference parameter triples ``(z0, lambda, mu)``.

Identifiers pair a number 1-6 with ``L`` or ``R``; the values are kept digit
for digit and pinned by :func:`preset_checksum`.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .core import ClassParams


@dataclass(frozen=True)
class FigurePreset:
    id: str
    z0: complex
    lam: complex
    mu: complex

    @property
    def params(self) -> ClassParams:
        return ClassParams(self.mu, self.lam)


_TABLE = [
    ("1L", -0.173777 + 0.0869191j, -0.196029 + 0.480913j, 32796 + 64560.2j),
    ("1R", -0.713811 - 0.0997298j, -0.225338 + 0.323073j, 69097.4 + 83886.6j),
    ("2L", -0.734426 + 0.61942j, -0.0564481 - 0.00656122j, 54025 - 5108.28j),
    ("2R", -0.69693 - 0.601351j, -0.0416728 - 0.683999j, 23944.2 + 50613.5j),
    ("3L", 0.0150249 + 0.994594j, -0.219752 - 0.256693j, 16828.1 - 35690.8j),
    ("3R", 0.378332 - 0.90135j, 0.366791 - 0.600223j, 5006.59 - 46769.8j),
    ("4L", 0.80351 + 0.549035j, -0.55886 + 0.0419296j, 83278.8 - 90464.3j),
    ("4R", 0.691568 + 0.644823j, 0.126172 + 0.137643j, 47178.4 + 83497.8j),
    ("5L", 0.737135 + 0.496542j, -0.00646307 - 0.0167039j, 14038.5 + 9544.66j),
    ("5R", -0.00588894 - 0.00496324j, -0.0472837 + 0.0970889j, 25447.1 - 2011.7j),
    ("6L", 0.556307 - 0.814404j, 0.226895 - 0.384635j, 13589.3 - 25797.8j),
    ("6R", 0.880992 - 0.328223j, -0.0326596 + 0.656304j, 39935.5 + 11412j),
]

PRESETS: dict[str, FigurePreset] = {row[0]: FigurePreset(*row) for row in _TABLE}
PRESET_IDS = tuple(PRESETS)


def get_preset(preset_id: str) -> FigurePreset:
    try:
        return PRESETS[preset_id.upper()]
    except KeyError:
        raise KeyError(f"unknown preset {preset_id!r}; choose from {', '.join(PRESET_IDS)}") from None


def preset_checksum() -> str:
    """SHA-256 over the ``repr`` of every triple, in table order."""
    text = "\n".join(f"{p.id}|{p.z0!r}|{p.lam!r}|{p.mu!r}" for p in PRESETS.values())
    return hashlib.sha256(text.encode()).hexdigest()

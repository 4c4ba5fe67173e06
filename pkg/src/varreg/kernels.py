"""Backend selection for the batch integrators.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``VARREG_PURE_PYTHON`` is set to a non-empty value, the
numpy implementation is used.  Both expose ``extremal_batch`` and
``member_batch`` with identical signatures.
"""
from __future__ import annotations

import os

from . import _pykernels

_compiled = None
if not os.environ.get("VARREG_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _pykernels

extremal_batch = _impl.extremal_batch
member_batch = _impl.member_batch


def available_backends() -> list[str]:
    return ["compiled", "python"] if _compiled is not None else ["python"]


def backend(name: str):
    """Return the kernel module for ``"compiled"`` or ``"python"``."""
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")

"""Value sets of ``log f(z0)`` over spirallike classes anchored at the boundary point 1."""
__version__ = "0.1.0"

from .bounds import (
    DiskBound,
    G_eval,
    G_prime,
    GContext,
    TangencyReport,
    c_center,
    check_tangency,
    extremal_identity_residual,
    g_roots,
    gamma0_path,
    path_bound,
    r_radius,
    schwarz_disk,
    starlike_margin,
)
from .core import ClassParams, Problem, as_complex, mobius_delta, tau, validate_params
from .errors import *  # noqa: F401,F403
from .extremal import ExtremalSpec, degenerate_value, dlog_H, log_H, log_H_batch, omega_H, p_H
from .kernels import BACKEND
from .presets import PRESET_IDS, PRESETS, FigurePreset, get_preset
from .quadrature import PathSpec, QuadratureResult, integrate_path, integrate_segment, radial_path
from .region import (
    BoundaryCurve,
    RegionPolygon,
    boundary_curve,
    contains,
    hausdorff,
    is_convex,
    is_simple,
)
from .samplers import MemberFunction, SchwarzGenerator, log_f, log_f_batch, p_f, random_member

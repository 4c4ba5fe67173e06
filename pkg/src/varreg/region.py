"""Boundary tracing and polygon predicates for the variability region.

The boundary is the closed curve ``theta -> log H_{e^{i theta}, lam}(z0)``.
Curves are sampled at ``n`` parameters; by default the parameters are placed
adaptively (greedy bisection of the edges with the largest sagitta proxy) so
that the fast-moving stretches that appear when ``|z0|`` is close to 1 are
resolved, and ``spacing="uniform"`` gives the plain equispaced grid.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .core import ClassParams, validate_params
from .errors import NonConvexInput, TooFewVertices
from .extremal import degenerate_value, log_H_batch
from .quadrature import DEFAULT_TOL

MIN_SAMPLES = 16


@dataclass
class BoundaryCurve:
    params: ClassParams
    z0: complex
    theta: np.ndarray
    w: np.ndarray
    tol: float
    err: np.ndarray = field(default=None, repr=False)
    singleton: bool = False
    spacing: str = "adaptive"

    def __len__(self):
        return self.w.size

    def polygon(self) -> "RegionPolygon":
        return RegionPolygon(self.w)


def uniform_thetas(n: int) -> np.ndarray:
    """``n`` equispaced parameters in ``(-pi, pi]``, ending at ``pi``."""
    return -np.pi + 2 * np.pi * np.arange(1, n + 1) / n


def _wrap(theta):
    return np.where(theta > np.pi, theta - 2 * np.pi, theta)


def _edge_scores(w: np.ndarray) -> np.ndarray:
    """Sagitta proxy ``|edge| * (mean turning at its ends + 2 pi / m)``."""
    e = np.roll(w, -1) - w
    length = np.abs(e)
    heading = np.angle(e)
    turn = np.abs(np.angle(np.exp(1j * (heading - np.roll(heading, 1)))))
    # turn[i] is the exterior angle at vertex i, between edge i-1 and edge i
    mean_turn = 0.5 * (turn + np.roll(turn, -1))
    return length * (mean_turn + 2 * np.pi / w.size)


def _adaptive_thetas(evaluate, n: int):
    m = max(MIN_SAMPLES, n // 4)
    theta = uniform_thetas(min(m, n))
    w, err = evaluate(theta)
    while theta.size < n:
        budget = min(n - theta.size, max(1, theta.size // 4))
        scores = _edge_scores(w)
        # stable ordering keeps ties deterministic
        pick = np.sort(np.argsort(-scores, kind="stable")[:budget])
        nxt = np.roll(theta, -1)
        span = np.where(nxt > theta, nxt - theta, nxt + 2 * np.pi - theta)
        new_theta = _wrap(theta[pick] + 0.5 * span[pick])
        new_w, new_err = evaluate(new_theta)
        theta = np.concatenate([theta, new_theta])
        w = np.concatenate([w, new_w])
        err = np.concatenate([err, new_err])
        order = np.argsort(theta, kind="stable")
        theta, w, err = theta[order], w[order], err[order]
    return theta, w, err


def boundary_curve(params: ClassParams, z0, n: int = 512, tol: float = DEFAULT_TOL,
                   spacing: str = "adaptive") -> BoundaryCurve:
    """Sample the boundary of the region of ``log f(z0)``.

    For ``|lam| = 1`` or ``z0 = 0`` the region is a single point and a
    one-sample curve with ``singleton=True`` is returned.
    """
    problem = validate_params(params, z0, warn=False)
    z0 = problem.z0
    if problem.singleton:
        return BoundaryCurve(params, z0, np.array([0.0]),
                             np.array([degenerate_value(params, z0)]), tol,
                             np.zeros(1), singleton=True, spacing=spacing)
    if n < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples, got {n}")

    def evaluate(theta):
        return log_H_batch(params, np.exp(1j * theta), z0, tol)

    if spacing == "uniform":
        theta = uniform_thetas(n)
        w, err = evaluate(theta)
    elif spacing == "adaptive":
        theta, w, err = _adaptive_thetas(evaluate, n)
    else:
        raise ValueError(f"unknown spacing {spacing!r}")
    return BoundaryCurve(params, z0, theta, w, tol, err, spacing=spacing)


# --- polygon geometry ----------------------------------------------------------

class RegionPolygon:
    """Cyclic list of vertices in the complex plane."""

    def __init__(self, vertices):
        self.vertices = np.asarray(vertices, dtype=complex).ravel()

    def __len__(self):
        return self.vertices.size

    def _need(self, k=3):
        if self.vertices.size < k:
            raise TooFewVertices(f"need at least {k} vertices, got {self.vertices.size}")

    @property
    def diameter(self) -> float:
        v = self.vertices
        return float(np.max(np.abs(v[:, None] - v[None, :]))) if v.size else 0.0

    @property
    def orientation(self) -> int:
        """+1 for counter-clockwise, -1 for clockwise (signed area)."""
        v = self.vertices
        area = 0.5 * np.sum((np.conj(v) * np.roll(v, -1)).imag)
        return 1 if area >= 0 else -1

    def centroid(self) -> complex:
        """Area centroid."""
        self._need()
        v, u = self.vertices, np.roll(self.vertices, -1)
        cross = (np.conj(v) * u).imag
        area = 0.5 * cross.sum()
        return complex(np.sum((v + u) * cross) / (6 * area))

    @property
    def area(self) -> float:
        """Unsigned shoelace area."""
        v = self.vertices
        return abs(0.5 * float(np.sum((np.conj(v) * np.roll(v, -1)).imag)))

    def cross_products(self) -> np.ndarray:
        """``(v[i+1]-v[i]) x (v[i+2]-v[i+1])`` for every i, cyclically."""
        e = np.roll(self.vertices, -1) - self.vertices
        return (np.conj(e) * np.roll(e, -1)).imag


class ConvexityReport(NamedTuple):
    convex: bool
    worst_index: int
    worst_value: float

    def __bool__(self):
        return self.convex


def is_convex(poly: RegionPolygon, tol: float = 1e-9) -> ConvexityReport:
    """Check that all turning cross products share one sign.

    Opposite-sign products of magnitude up to ``tol * D**2`` are tolerated.
    ``worst_value`` is the most negative product relative to ``D**2`` after
    orienting the polygon counter-clockwise.
    """
    poly._need()
    cross = poly.cross_products() * poly.orientation
    d2 = poly.diameter ** 2
    rel = cross / d2 if d2 > 0 else cross
    i = int(np.argmin(rel))
    return ConvexityReport(bool(rel[i] >= -tol), (i + 1) % len(poly), float(rel[i]))


def _segments_cross(p1, p2, q1, q2):
    def orient(a, b, c):
        return ((b - a).conjugate() * (c - a)).imag

    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    return (d1 * d2 <= 0) & (d3 * d4 <= 0)


def is_simple(poly: RegionPolygon) -> bool:
    """Pairwise test of non-adjacent edges for intersection."""
    poly._need()
    v = poly.vertices
    n = v.size
    a, b = v, np.roll(v, -1)
    i, j = np.triu_indices(n, k=2)
    # edges n-1 and 0 share a vertex
    keep = ~((i == 0) & (j == n - 1))
    i, j = i[keep], j[keep]
    if i.size == 0:
        return True
    hits = _segments_cross(a[i], b[i], a[j], b[j])
    return not bool(np.any(hits))


INSIDE, BOUNDARY, OUTSIDE = "inside", "boundary", "outside"


def signed_margin(poly: RegionPolygon, w) -> np.ndarray:
    """Distance to the nearest edge line, positive inside a convex polygon."""
    v = poly.vertices
    e = np.roll(v, -1) - v
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    # positive to the left of each edge
    left = (np.conj(e)[None, :] * (w[:, None] - v[None, :])).imag / np.abs(e)[None, :]
    return (poly.orientation * left).min(axis=1)


def contains(poly: RegionPolygon, w, tol: float = 1e-6, check_convex: bool = True):
    """Classify ``w`` as ``"inside"``, ``"boundary"`` or ``"outside"``.

    The boundary band has half-width ``tol * D``.  Accepts a scalar or an
    array; arrays give an array of labels.
    """
    poly._need()
    if check_convex and not is_convex(poly, 1e-9):
        raise NonConvexInput("containment test needs a convex polygon")
    margin = signed_margin(poly, w)
    band = tol * poly.diameter
    labels = np.where(margin > band, INSIDE, np.where(margin < -band, OUTSIDE, BOUNDARY))
    if np.ndim(w) == 0:
        return str(labels[0])
    return labels


def _point_segment_distance(p, a, b):
    ab = b - a
    denom = np.abs(ab) ** 2
    t = np.clip(((p[:, None] - a[None, :]) * np.conj(ab)[None, :]).real
                / np.where(denom > 0, denom, 1.0)[None, :], 0, 1)
    return np.abs(p[:, None] - (a[None, :] + t * ab[None, :])).min(axis=1)


def _curve_to_polygon(points, poly: RegionPolygon):
    v = poly.vertices
    return float(_point_segment_distance(points, v, np.roll(v, -1)).max())


def hausdorff(p: RegionPolygon, q: RegionPolygon) -> float:
    """Hausdorff distance between two closed polygonal curves.

    Each curve is represented by its vertices and edge midpoints.
    """
    def pts(poly):
        v = poly.vertices
        return np.concatenate([v, 0.5 * (v + np.roll(v, -1))])

    return max(_curve_to_polygon(pts(p), q), _curve_to_polygon(pts(q), p))


def convex_hull(points) -> RegionPolygon:
    """Counter-clockwise hull by the monotone chain; collinear points dropped."""
    pts = sorted({(float(z.real), float(z.imag)) for z in np.atleast_1d(np.asarray(points, dtype=complex))})
    if len(pts) < 3:
        return RegionPolygon([complex(*p) for p in pts])

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out[:-1]

    hull = chain(pts) + chain(reversed(pts))
    return RegionPolygon([complex(*p) for p in hull])


def min_separation(poly: RegionPolygon) -> float:
    """Smallest distance between two distinct vertices."""
    v = poly.vertices
    d = np.abs(v[:, None] - v[None, :])
    d[np.diag_indices_from(d)] = np.inf
    return float(d.min())

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from varreg.core import ClassParams
from varreg.errors import NonConvexInput, TooFewVertices
from varreg.extremal import degenerate_value
from varreg.presets import PRESETS
from varreg.region import (
    RegionPolygon,
    boundary_curve,
    contains,
    convex_hull,
    hausdorff,
    is_convex,
    is_simple,
    min_separation,
    signed_margin,
    uniform_thetas,
)

SQUARE = RegionPolygon([0, 1, 1 + 1j, 1j])


def test_square_predicates():
    assert is_convex(SQUARE)
    assert is_simple(SQUARE)
    assert SQUARE.orientation == 1
    assert SQUARE.centroid() == pytest.approx(0.5 + 0.5j)
    assert SQUARE.diameter == pytest.approx(math.sqrt(2))


def test_reflected_vertex_breaks_convexity():
    report = is_convex(RegionPolygon([0, 1, 0.5 + 0.3j, 1j]))
    assert not report.convex
    assert report.worst_index == 2
    assert report.worst_value < 0


def test_clockwise_square_is_convex():
    assert is_convex(RegionPolygon(SQUARE.vertices[::-1]))


def test_figure_eight():
    bowtie = RegionPolygon([0, 1 + 1j, 1, 1j])
    assert not is_simple(bowtie)


def test_too_few_vertices():
    with pytest.raises(TooFewVertices):
        is_convex(RegionPolygon([0, 1]))
    with pytest.raises(TooFewVertices):
        is_simple(RegionPolygon([0]))


def test_contains_labels():
    assert contains(SQUARE, SQUARE.centroid()) == "inside"
    assert contains(SQUARE, 3 + 3j) == "outside"
    assert contains(SQUARE, 0.5) == "boundary"
    labels = contains(SQUARE, np.array([0.5 + 0.5j, -1, 1 + 0.5j]))
    assert list(labels) == ["inside", "outside", "boundary"]
    with pytest.raises(NonConvexInput):
        contains(RegionPolygon([0, 1, 0.5 + 0.3j, 1j]), 0.2j)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 40), st.floats(0.1, 10), st.complex_numbers(max_magnitude=100))
def test_regular_polygon_properties(m, radius, shift):
    v = shift + radius * np.exp(2j * np.pi * np.arange(m) / m)
    poly = RegionPolygon(v)
    assert is_convex(poly) and is_simple(poly)
    assert contains(poly, shift) == "inside"
    assert contains(poly, shift + 3 * radius) == "outside"
    assert signed_margin(poly, shift)[0] == pytest.approx(radius * math.cos(math.pi / m))


def test_hausdorff():
    assert hausdorff(SQUARE, SQUARE) == 0
    shifted = RegionPolygon(SQUARE.vertices + 0.1)
    assert hausdorff(SQUARE, shifted) == pytest.approx(0.1)


def test_uniform_thetas():
    t = uniform_thetas(8)
    assert t[-1] == pytest.approx(math.pi) and t[0] > -math.pi
    assert np.allclose(np.diff(t), math.pi / 4)


def test_singleton_curves():
    params = ClassParams(3 + 1j, cmath.exp(1.2j))
    curve = boundary_curve(params, 0.4 + 0.2j)
    assert curve.singleton and len(curve) == 1
    assert curve.w[0] == pytest.approx(degenerate_value(params, 0.4 + 0.2j))
    curve = boundary_curve(PRESETS["1L"].params, 0)
    assert curve.singleton and curve.w[0] == 0


def test_curve_options():
    p = PRESETS["5R"]
    uni = boundary_curve(p.params, p.z0, 64, spacing="uniform")
    np.testing.assert_array_equal(uni.theta, uniform_thetas(64))
    ada = boundary_curve(p.params, p.z0, 64)
    assert len(ada) == 64 and np.all(np.diff(ada.theta) > 0)
    with pytest.raises(ValueError):
        boundary_curve(p.params, p.z0, 8)
    with pytest.raises(ValueError):
        boundary_curve(p.params, p.z0, 64, spacing="random")


def test_curve_is_deterministic():
    p = PRESETS["3L"]
    a = boundary_curve(p.params, p.z0, 128)
    b = boundary_curve(p.params, p.z0, 128)
    np.testing.assert_array_equal(a.w, b.w)
    np.testing.assert_array_equal(a.theta, b.theta)


@pytest.mark.parametrize("pid", sorted(PRESETS))
def test_preset_curves(pid, curves512):
    curve = curves512[pid]
    poly = curve.polygon()
    assert len(curve) == 512
    assert np.all(np.diff(curve.theta) > 0) and curve.theta[-1] <= math.pi
    assert is_convex(poly, 1e-9) and is_simple(poly)
    assert min_separation(poly) > 1e-8 * poly.diameter
    assert contains(poly, degenerate_value(curve.params, curve.z0)) == "inside"
    assert np.all(curve.err <= curve.params.abs_scale * curve.tol)


def test_vertices_on_convex_hull_of_region(curves512):
    # the curve for a = e^{i theta} bounds the values of interior parameters |a| < 1
    from varreg.extremal import log_H_batch
    curve = curves512["2R"]
    rng = np.random.default_rng(5)
    a = np.sqrt(rng.random(300)) * np.exp(2j * np.pi * rng.random(300))
    vals, _ = log_H_batch(curve.params, a, curve.z0)
    assert not np.any(contains(curve.polygon(), vals) == "outside")


def test_convex_hull_and_area():
    pts = np.array([0, 1, 1 + 1j, 1j, 0.5 + 0.5j, 0.2 + 0.1j, 0.5])
    hull = convex_hull(pts)
    assert len(hull) == 4 and hull.orientation == 1
    assert hull.area == pytest.approx(1.0)
    assert len(convex_hull([0, 1])) == 2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=10), min_size=3, max_size=60))
def test_hull_contains_its_points(points):
    hull = convex_hull(points)
    if len(hull) >= 3 and hull.area > 1e-9:
        assert is_convex(hull)
        labels = contains(hull, np.array(points), 1e-9)
        assert not np.any(labels == "outside")

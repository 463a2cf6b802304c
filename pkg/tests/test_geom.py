import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arc_census.errors import BoundaryCase, DegenerateInput, SpanTooLarge
from arc_census.geom import (Point, UnitArc, arc_arc_intersections,
                             arc_circle_cross_twice, arc_pair_crossing_count,
                             in_lune, in_lune_prime, in_wedge,
                             twice_crossing_conditions, wedge_of)
from conftest import arc_deg

SQ3 = math.sqrt(3.0)


def lune_arc():
    # endpoints (0,0) and (1,0)
    cy = math.sqrt(0.75)
    t0 = math.atan2(-cy, -0.5)
    t1 = math.atan2(-cy, 0.5)
    if t1 <= t0:
        t1 += 2 * math.pi
    return UnitArc(9, Point(0.5, cy), t0, t1)


class TestArcArcIntersections:
    def test_upper_semicircles_single_point(self):
        a = UnitArc(0, Point(0, 0), 0, math.pi)
        b = UnitArc(1, Point(1, 0), 0, math.pi)
        pts = arc_arc_intersections(a, b)
        assert len(pts) == 1
        assert pts[0].x == pytest.approx(0.5)
        assert pts[0].y == pytest.approx(SQ3 / 2)

    def test_disjoint_circles(self):
        a = UnitArc(0, Point(0, 0), 0, 2 * math.pi)
        b = UnitArc(1, Point(3, 0), 0, 2 * math.pi)
        assert arc_arc_intersections(a, b) == []

    def test_two_point_pair(self):
        a = arc_deg(0, 0, 0, -80, 80)
        b = arc_deg(1, 1.8, 0, 100, 260)
        pts = sorted((round(p.x, 5), round(p.y, 5))
                     for p in arc_arc_intersections(a, b))
        assert pts == [(0.9, -0.43589), (0.9, 0.43589)]
        # dense sampling confirms both points lie on both arcs
        for p in arc_arc_intersections(a, b):
            for s in (a, b):
                d = math.hypot(p.x - s.center.x, p.y - s.center.y)
                assert abs(d - 1.0) < 1e-12

    def test_same_circle_rejected(self):
        a = UnitArc(0, Point(0, 0), 0, 1)
        b = UnitArc(1, Point(0, 0), 2, 3)
        with pytest.raises(DegenerateInput):
            arc_arc_intersections(a, b)

    def test_tangent_rejected(self):
        a = UnitArc(0, Point(0, 0), 0, 2 * math.pi)
        b = UnitArc(1, Point(2, 0), 0, 2 * math.pi)
        with pytest.raises(DegenerateInput):
            arc_arc_intersections(a, b)

    @settings(max_examples=200, deadline=None)
    @given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0, 6.28),
           st.floats(0.2, 6.28), st.floats(0, 6.28), st.floats(0.2, 6.28))
    def test_symmetric(self, cx, cy, t0a, spana, t0b, spanb):
        a = UnitArc(0, Point(0.0, 0.0), t0a, t0a + spana)
        b = UnitArc(1, Point(cx, cy), t0b, t0b + spanb)
        d = math.hypot(cx, cy)
        if d < 1e-3 or abs(d - 2) < 1e-3:
            return
        pa = {(round(p.x, 12), round(p.y, 12))
              for p in arc_arc_intersections(a, b)}
        pb = {(round(p.x, 12), round(p.y, 12))
              for p in arc_arc_intersections(b, a)}
        assert pa == pb


class TestLune:
    def test_one_endpoint_inside(self):
        assert in_lune(Point(1.6, 0), lune_arc()) is True

    def test_both_inside(self):
        assert in_lune(Point(0.5, 0), lune_arc()) is False

    def test_both_outside(self):
        assert in_lune(Point(3, 0), lune_arc()) is False

    def test_prime(self):
        s = lune_arc()
        assert in_lune_prime(Point(3, 0), s) is True
        assert in_lune_prime(Point(1.6, 0), s) is False
        assert in_lune_prime(Point(0.5, 0.2), s) is False

    def test_boundary_raises(self):
        # query at distance exactly 1 from the endpoint (1, 0)
        with pytest.raises(BoundaryCase):
            in_lune(Point(2.0, 0.0), lune_arc())


class TestWedge:
    def test_apex_and_rays(self):
        s = arc_deg(0, 0, 0, 30, 90)
        w = wedge_of(s)
        assert w.apex == Point(0, 0)
        assert w.ray_lo == pytest.approx(math.radians(30))
        assert w.ray_hi == pytest.approx(math.radians(90))

    def test_membership(self):
        w = wedge_of(arc_deg(0, 0, 0, 30, 90))
        p = Point(5 * math.cos(math.radians(60)), 5 * math.sin(math.radians(60)))
        assert in_wedge(p, w) is True
        assert in_wedge(Point(1, 0), w) is False

    def test_span_too_large(self):
        with pytest.raises(SpanTooLarge):
            wedge_of(arc_deg(0, 0, 0, 0, 185))

    def test_containment_along_arc(self):
        s = arc_deg(0, 0.3, -0.2, 100, 240)
        w = wedge_of(s)
        for t in np.linspace(s.theta_start, s.theta_end, 256):
            assert in_wedge(s.point_at(float(t)), w)


class TestTwiceWithCircle:
    def test_example_true(self):
        s = arc_deg(0, 0, 0, -80, 80)
        assert arc_circle_cross_twice(s, Point(1.8, 0)) is True
        circle = UnitArc(1, Point(1.8, 0), 0, 2 * math.pi)
        assert arc_pair_crossing_count(s, circle) == 2

    def test_disjoint_false(self):
        s = arc_deg(0, 0, 0, -80, 80)
        assert arc_circle_cross_twice(s, Point(3, 0)) is False

    def test_endpoints_inside_false(self):
        s = arc_deg(0, 0, 0, -80, 80)
        assert arc_circle_cross_twice(s, Point(0.1, 0)) is False


class TestTwicePair:
    def test_twice_pair_true(self):
        a = arc_deg(0, 0, 0, -80, 80)
        b = arc_deg(1, 1.8, 0, 100, 260)
        assert twice_crossing_conditions(b, a) is True
        assert arc_pair_crossing_count(a, b) == 2

    def test_once_pair_false(self):
        a = arc_deg(0, 0, 0, 10, 170)
        b = arc_deg(1, 1, 0, 10, 170)
        assert twice_crossing_conditions(b, a) is False

    def test_disjoint_false(self):
        a = arc_deg(0, 0, 0, -80, 80)
        b = arc_deg(1, 3, 0, 100, 260)
        assert twice_crossing_conditions(b, a) is False


class TestNormalization:
    def test_negative_start(self):
        a = arc_deg(0, 0, 0, -80, 80)
        assert 0 <= a.theta_start < 2 * math.pi
        assert a.span == pytest.approx(math.radians(160))

    def test_full_circle(self):
        a = UnitArc(0, Point(0, 0), 1.0, 1.0 + 2 * math.pi)
        assert a.is_full_circle
        assert a.contains_angle(4.0)

    def test_bad_span(self):
        with pytest.raises(DegenerateInput):
            UnitArc(0, Point(0, 0), 1.0, 1.0)

"""Randomized equivalence suites for the crossing characterizations.

Samples are drawn vectorized and filtered to a general-position margin, so
each suite covers tens of thousands of configurations in well under a
second.  The full-size runs live in the acceptance suite.
"""

import math

import numpy as np
import pytest

from arc_census.geom import (Point, UnitArc, arc_circle_cross_twice_core,
                             arc_pair_crossing_count, in_lune_core,
                             in_lune_prime_core, twice_crossing_conditions_core)

TWO_PI = 2 * math.pi
MARGIN = 1e-6


def sample_arcs(rng, n, span_lo=0.2, span_hi=math.pi - 0.01, box=2.0):
    cx = rng.uniform(-box, box, n)
    cy = rng.uniform(-box, box, n)
    t0 = rng.uniform(0, TWO_PI, n)
    span = rng.uniform(span_lo, span_hi, n)
    return cx, cy, t0, span


def margin_ok(p: Point, s: UnitArc) -> bool:
    d = math.hypot(p.x - s.center.x, p.y - s.center.y)
    if d < MARGIN or abs(d - 2.0) < MARGIN:
        return False
    for e in s.endpoints():
        de = math.hypot(p.x - e.x, p.y - e.y)
        if abs(de - 1.0) < MARGIN:
            return False
    # wedge-ray clearance: angular distance of p's direction from the rays
    td = math.atan2(p.y - s.center.y, p.x - s.center.x)
    for ray in (s.theta_start, s.theta_end):
        diff = (td - ray) % TWO_PI
        if min(diff, TWO_PI - diff) * d < MARGIN:
            return False
    return True


def run_parity_suite(n_samples: int, seed: int = 0) -> int:
    """Lune membership vs odd crossing parity of the unit circle at the
    query point; returns the number of violations."""
    rng = np.random.default_rng(seed)
    cx, cy, t0, span = sample_arcs(rng, n_samples)
    qx = rng.uniform(-3, 3, n_samples)
    qy = rng.uniform(-3, 3, n_samples)
    bad = 0
    for i in range(n_samples):
        s = UnitArc(0, Point(cx[i], cy[i]), t0[i], t0[i] + span[i])
        p = Point(qx[i], qy[i])
        if not margin_ok(p, s):
            continue
        circle = UnitArc(1, p, 0, TWO_PI)
        k = arc_pair_crossing_count(circle, s)
        e0, e1 = s.endpoints()
        inside0 = math.hypot(p.x - e0.x, p.y - e0.y) < 1.0
        inside1 = math.hypot(p.x - e1.x, p.y - e1.y) < 1.0
        if in_lune_core(p, s) != (k == 1):
            bad += 1
        if in_lune_prime_core(p, s) or (inside0 and inside1):
            if k not in (0, 2):
                bad += 1
    return bad


def run_circle_twice_suite(n_samples: int, seed: int = 1) -> int:
    rng = np.random.default_rng(seed)
    cx, cy, t0, span = sample_arcs(rng, n_samples)
    qx = rng.uniform(-3, 3, n_samples)
    qy = rng.uniform(-3, 3, n_samples)
    bad = 0
    for i in range(n_samples):
        s = UnitArc(0, Point(cx[i], cy[i]), t0[i], t0[i] + span[i])
        p = Point(qx[i], qy[i])
        if not margin_ok(p, s):
            continue
        circle = UnitArc(1, p, 0, TWO_PI)
        truth = arc_pair_crossing_count(s, circle) == 2
        if arc_circle_cross_twice_core(s, p) != truth:
            bad += 1
    return bad


def run_pair_twice_suite(n_samples: int, seed: int = 2) -> int:
    """Forward implication: crossing twice implies the five conditions; and
    the five conditions imply both circle-level double crossings."""
    rng = np.random.default_rng(seed)
    cxa, cya, t0a, spana = sample_arcs(rng, n_samples)
    cxb, cyb, t0b, spanb = sample_arcs(rng, n_samples, box=1.0)
    bad = 0
    for i in range(n_samples):
        a = UnitArc(0, Point(cxa[i], cya[i]), t0a[i], t0a[i] + spana[i])
        b = UnitArc(1, Point(cxa[i] + cxb[i] * 0.8, cya[i] + cyb[i] * 0.8),
                    t0b[i], t0b[i] + spanb[i])
        if not (margin_ok(b.center, a) and margin_ok(a.center, b)):
            continue
        skip = False
        for p, s in ((a.center, b), (b.center, a)):
            for e in s.endpoints():
                if abs(math.hypot(p.x - e.x, p.y - e.y) - 1.0) < MARGIN:
                    skip = True
        if skip:
            continue
        cond = twice_crossing_conditions_core(b, a)
        k = arc_pair_crossing_count(a, b)
        if k == 2 and not cond:
            bad += 1
        if cond:
            ca = UnitArc(2, a.center, 0, TWO_PI)
            cb = UnitArc(3, b.center, 0, TWO_PI)
            if arc_pair_crossing_count(b, ca) != 2:
                bad += 1
            if arc_pair_crossing_count(a, cb) != 2:
                bad += 1
            if k != 2:
                bad += 1
    return bad


@pytest.mark.parametrize("suite,expected", [
    (run_parity_suite, 0),
    (run_circle_twice_suite, 0),
    (run_pair_twice_suite, 0),
])
def test_predicate_suites_quick(suite, expected):
    assert suite(20_000) == expected

"""Planar primitives and the scalar predicates used by the counting pipeline.

All arcs have radius 1.  An arc is stored as its circle center plus a CCW
angular interval [theta_start, theta_end] with theta_start normalized into
[0, 2*pi) and span = theta_end - theta_start in (0, 2*pi]; span == 2*pi
encodes a full circle.

Each public predicate has two layers: a plain-comparison core (``*_core``)
that always returns a bool, and a checked wrapper that raises BoundaryCase
when the configuration lies within eps of the decision boundary.  The
pipeline runs on margin-validated inputs and calls the cores; the wrappers
are the API surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import config
from .errors import BoundaryCase, DegenerateInput, SpanTooLarge

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __iter__(self):
        yield self.x
        yield self.y


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def norm_angle(theta: float) -> float:
    """Reduce to [0, 2*pi)."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:
        t = 0.0
    return t


@dataclass
class UnitArc:
    id: int
    center: Point
    theta_start: float
    theta_end: float
    color: str = "none"  # "red" | "blue" | "none"
    base_id: int = field(default=-1)

    def __post_init__(self):
        if self.base_id < 0:
            self.base_id = self.id
        span = self.theta_end - self.theta_start
        if not (0.0 < span <= TWO_PI + 1e-12):
            raise DegenerateInput(
                f"arc {self.id}: span {span} outside (0, 2*pi]")
        span = min(span, TWO_PI)
        start = norm_angle(self.theta_start)
        self.theta_start = start
        self.theta_end = start + span

    @property
    def span(self) -> float:
        return self.theta_end - self.theta_start

    @property
    def is_full_circle(self) -> bool:
        return self.span >= TWO_PI

    def point_at(self, theta: float) -> Point:
        return Point(self.center.x + math.cos(theta),
                     self.center.y + math.sin(theta))

    def endpoint(self, which: int) -> Point:
        theta = self.theta_start if which == 0 else self.theta_end
        return self.point_at(theta)

    def endpoints(self) -> tuple[Point, Point]:
        return self.endpoint(0), self.endpoint(1)

    def contains_angle(self, theta: float) -> bool:
        """Closed CCW interval membership."""
        if self.is_full_circle:
            return True
        d = math.fmod(theta - self.theta_start, TWO_PI)
        if d < 0.0:
            d += TWO_PI
        return d <= self.span

    def subarc(self, lo: float, hi: float, new_id: int) -> "UnitArc":
        """Sub-arc over the CCW interval [lo, hi] (inside this arc's span)."""
        return UnitArc(new_id, self.center, lo, hi, self.color, self.base_id)


@dataclass(frozen=True)
class Wedge:
    """CCW angular sector at ``apex`` from ray_lo to ray_hi, width < pi."""
    apex: Point
    ray_lo: float
    ray_hi: float

    @property
    def width(self) -> float:
        d = math.fmod(self.ray_hi - self.ray_lo, TWO_PI)
        if d < 0.0:
            d += TWO_PI
        return d


# ---------------------------------------------------------------------------
# circle / circle intersection


def circle_circle_points(c1: Point, r1: float, c2: Point, r2: float):
    """Intersection points of two circles, [] if disjoint/nested.

    Tangency and coincident centers are the caller's problem; this computes
    the radical-line solution whenever the discriminant is positive.

    Equal-radius pairs are evaluated in a canonical center order so the two
    argument orders produce bit-identical points; exact ties (a crossing
    landing on a piece endpoint) then resolve the same way everywhere.
    """
    if r1 == r2 and (c2.x, c2.y) < (c1.x, c1.y):
        c1, c2 = c2, c1
    dx = c2.x - c1.x
    dy = c2.y - c1.y
    d2 = dx * dx + dy * dy
    if d2 == 0.0:
        return []
    d = math.sqrt(d2)
    if d >= r1 + r2 or d <= abs(r1 - r2):
        return []
    a = (d2 + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    if h2 <= 0.0:
        return []
    h = math.sqrt(h2)
    ux, uy = dx / d, dy / d
    mx, my = c1.x + a * ux, c1.y + a * uy
    return [Point(mx - h * uy, my + h * ux), Point(mx + h * uy, my - h * ux)]


def arc_arc_intersections(a: UnitArc, b: UnitArc, eps: float | None = None) -> list[Point]:
    """Points lying on both arcs (0, 1 or 2 of them).

    Raises DegenerateInput for co-circular or tangent underlying circles.
    """
    if eps is None:
        eps = config.EPS
    d = dist(a.center, b.center)
    if d <= eps:
        raise DegenerateInput(
            f"arcs {a.id},{b.id}: centers coincide within eps",
            pair=(a.id, b.id))
    if abs(d - 2.0) <= eps:
        raise DegenerateInput(
            f"arcs {a.id},{b.id}: circles tangent within eps",
            pair=(a.id, b.id))
    pts = circle_circle_points(a.center, 1.0, b.center, 1.0)
    out = []
    for p in pts:
        ta = math.atan2(p.y - a.center.y, p.x - a.center.x)
        tb = math.atan2(p.y - b.center.y, p.x - b.center.x)
        if a.contains_angle(ta) and b.contains_angle(tb):
            out.append(p)
    return out


def arc_pair_crossing_count(a: UnitArc, b: UnitArc) -> int:
    """Non-raising crossing count used by the pipeline cores."""
    pts = circle_circle_points(a.center, 1.0, b.center, 1.0)
    n = 0
    for p in pts:
        ta = math.atan2(p.y - a.center.y, p.x - a.center.x)
        tb = math.atan2(p.y - b.center.y, p.x - b.center.x)
        if a.contains_angle(ta) and b.contains_angle(tb):
            n += 1
    return n


# ---------------------------------------------------------------------------
# lune predicates
#
# lune(s): symmetric difference of the unit disks centered at s's endpoints.
# A point is inside iff exactly one endpoint of s is strictly inside the unit
# disk centered at the point, which happens iff the unit circle at the point
# crosses the underlying circle region of s an odd number of times along s.


def in_lune_core(p: Point, s: UnitArc) -> bool:
    e0, e1 = s.endpoints()
    return (dist(p, e0) < 1.0) != (dist(p, e1) < 1.0)


def in_lune_prime_core(p: Point, s: UnitArc) -> bool:
    e0, e1 = s.endpoints()
    return dist(p, e0) > 1.0 and dist(p, e1) > 1.0


def _check_lune_margin(p: Point, s: UnitArc, eps: float):
    for e in s.endpoints():
        if abs(dist(p, e) - 1.0) <= eps:
            raise BoundaryCase(
                f"endpoint of arc {s.id} within eps of unit distance from query")


def in_lune(p: Point, s_b: UnitArc, eps: float | None = None) -> bool:
    if eps is None:
        eps = config.EPS
    _check_lune_margin(p, s_b, eps)
    return in_lune_core(p, s_b)


def in_lune_prime(p: Point, s_b: UnitArc, eps: float | None = None) -> bool:
    if eps is None:
        eps = config.EPS
    _check_lune_margin(p, s_b, eps)
    return in_lune_prime_core(p, s_b)


# ---------------------------------------------------------------------------
# wedges


def wedge_of(s: UnitArc) -> Wedge:
    """Sector at s's center bounded by the rays through s's endpoints and
    containing s.  Defined for arcs spanning strictly less than a semicircle."""
    if s.span >= math.pi:
        raise SpanTooLarge(f"arc {s.id} spans {s.span} >= pi")
    return Wedge(s.center, norm_angle(s.theta_start), norm_angle(s.theta_end))


def in_wedge(p: Point, w: Wedge) -> bool:
    """Closed-sector membership.  The apex itself counts as inside."""
    dx = p.x - w.apex.x
    dy = p.y - w.apex.y
    if dx == 0.0 and dy == 0.0:
        return True
    theta = math.atan2(dy, dx)
    d = math.fmod(theta - w.ray_lo, TWO_PI)
    if d < 0.0:
        d += TWO_PI
    return d <= w.width


def in_wedge_core(p: Point, apex: Point, e0: Point, e1: Point) -> bool:
    """Closed membership in the CCW sector apex->(e0 ... e1), width < pi.

    Cross-product form; avoids atan2 in the hot path."""
    ux, uy = e0.x - apex.x, e0.y - apex.y
    vx, vy = e1.x - apex.x, e1.y - apex.y
    px, py = p.x - apex.x, p.y - apex.y
    return (ux * py - uy * px) >= 0.0 and (px * vy - py * vx) >= 0.0


# ---------------------------------------------------------------------------
# twice-crossing characterizations


def arc_circle_cross_twice_core(s: UnitArc, q: Point) -> bool:
    """True iff the unit circle centered at q crosses s twice, for arcs with
    span < pi, expressed through three closed conditions: q in the wedge of
    s, neither endpoint of s strictly inside the disk at q, and the two unit
    circles intersect."""
    e0, e1 = s.endpoints()
    if not in_wedge_core(q, s.center, e0, e1):
        return False
    if dist(q, e0) < 1.0 or dist(q, e1) < 1.0:
        return False
    d = dist(q, s.center)
    return 0.0 < d < 2.0


def arc_circle_cross_twice(s: UnitArc, q: Point, eps: float | None = None) -> bool:
    if eps is None:
        eps = config.EPS
    if s.span >= math.pi:
        raise SpanTooLarge(f"arc {s.id} spans {s.span} >= pi")
    e0, e1 = s.endpoints()
    for e in (e0, e1):
        if abs(dist(q, e) - 1.0) <= eps:
            raise BoundaryCase("endpoint within eps of the query circle")
    d = dist(q, s.center)
    if abs(d - 2.0) <= eps or d <= eps:
        raise BoundaryCase("circles within eps of tangency")
    tq = math.atan2(q.y - s.center.y, q.x - s.center.x)
    for ray in (s.theta_start, s.theta_end):
        diff = math.fmod(tq - ray, TWO_PI)
        if diff < 0.0:
            diff += TWO_PI
        if min(diff, TWO_PI - diff) * d <= eps:
            raise BoundaryCase("query within eps of a wedge ray")
    return arc_circle_cross_twice_core(s, q)


def twice_crossing_conditions_core(s_b: UnitArc, s_r: UnitArc) -> bool:
    """Five closed conditions equivalent to ``s_b and s_r cross twice`` for
    sub-semicircle arcs: each center in the other's wedge, each disk free of
    the other's endpoints, and the circles intersect."""
    b0, b1 = s_b.endpoints()
    r0, r1 = s_r.endpoints()
    if not in_wedge_core(s_r.center, s_b.center, b0, b1):
        return False
    if dist(s_r.center, b0) < 1.0 or dist(s_r.center, b1) < 1.0:
        return False
    if not in_wedge_core(s_b.center, s_r.center, r0, r1):
        return False
    if dist(s_b.center, r0) < 1.0 or dist(s_b.center, r1) < 1.0:
        return False
    d = dist(s_b.center, s_r.center)
    return 0.0 < d < 2.0


def twice_crossing_conditions(s_b: UnitArc, s_r: UnitArc,
                              eps: float | None = None) -> bool:
    if eps is None:
        eps = config.EPS
    if s_b.span >= math.pi or s_r.span >= math.pi:
        raise SpanTooLarge("both arcs must span < pi")
    d = dist(s_b.center, s_r.center)
    if d <= eps:
        raise DegenerateInput("centers coincide within eps",
                              pair=(s_b.id, s_r.id))
    if abs(d - 2.0) <= eps:
        raise BoundaryCase("circles within eps of tangency")
    for p, s in ((s_r.center, s_b), (s_b.center, s_r)):
        for e in s.endpoints():
            if abs(dist(p, e) - 1.0) <= eps:
                raise BoundaryCase("endpoint within eps of a center's unit circle")
    return twice_crossing_conditions_core(s_b, s_r)

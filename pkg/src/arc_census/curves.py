"""X-monotone curve pieces: circle-arc branches and segments.

These are the boundary elements of cutting cells and the items cuttings are
built over.  A circle piece lives on one vertical branch (upper or lower
semicircle) so y is a function of x over its domain.  Identity matters:
pieces derived from the same underlying circle carry an identical
``circle_key`` (the exact center/radius floats), which lets coincidence be
detected without tolerances.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

_uid_counter = itertools.count(1)

UPPER = 1
LOWER = -1


@dataclass
class Curve:
    kind: str                     # "arc" | "seg"
    x_lo: float
    x_hi: float
    owner: int = -1               # id of the source object (arc id, region id...)
    uid: int = field(default_factory=lambda: next(_uid_counter))
    # arc fields
    cx: float = 0.0
    cy: float = 0.0
    r: float = 1.0
    branch: int = UPPER
    # seg fields (y at x_lo / x_hi); vertical segments have x_lo == x_hi
    y_lo: float = 0.0
    y_hi: float = 0.0

    @property
    def circle_key(self):
        if self.kind != "arc":
            return None
        return (self.cx, self.cy, self.r)

    @property
    def is_vertical(self) -> bool:
        return self.kind == "seg" and self.x_lo == self.x_hi

    def y_at(self, x: float) -> float:
        if self.kind == "seg":
            if self.x_hi == self.x_lo:
                return min(self.y_lo, self.y_hi)
            if x <= self.x_lo:
                return self.y_lo
            if x >= self.x_hi:
                return self.y_hi
            t = (x - self.x_lo) / (self.x_hi - self.x_lo)
            return self.y_lo + t * (self.y_hi - self.y_lo)
        dx = x - self.cx
        if dx < -self.r:
            dx = -self.r
        elif dx > self.r:
            dx = self.r
        h = math.sqrt(max(self.r * self.r - dx * dx, 0.0))
        return self.cy + (h if self.branch == UPPER else -h)

    def y_range(self) -> tuple[float, float]:
        if self.kind == "seg":
            return (min(self.y_lo, self.y_hi), max(self.y_lo, self.y_hi))
        ys = [self.y_at(self.x_lo), self.y_at(self.x_hi)]
        # branch apex inside the domain
        if self.x_lo <= self.cx <= self.x_hi:
            ys.append(self.cy + (self.r if self.branch == UPPER else -self.r))
        return (min(ys), max(ys))

    def on_piece(self, x: float, y: float, tol: float = 1e-9) -> bool:
        if not (self.x_lo - tol <= x <= self.x_hi + tol):
            return False
        if self.kind == "arc":
            if self.branch == UPPER and y < self.cy - tol:
                return False
            if self.branch == LOWER and y > self.cy + tol:
                return False
        return True


def seg(x0: float, y0: float, x1: float, y1: float, owner: int = -1) -> Curve:
    if (x1, y1) < (x0, y0):
        x0, y0, x1, y1 = x1, y1, x0, y0
    return Curve("seg", x0, x1, owner=owner, y_lo=y0, y_hi=y1)


def circle_branch(cx: float, cy: float, r: float, branch: int,
                  x_lo: float, x_hi: float, owner: int = -1) -> Curve:
    return Curve("arc", x_lo, x_hi, owner=owner, cx=cx, cy=cy, r=r,
                 branch=branch)


def circle_pieces(cx: float, cy: float, r: float, theta_lo: float,
                  theta_hi: float, owner: int = -1) -> list[Curve]:
    """Split the CCW arc [theta_lo, theta_hi] (span <= 2*pi) of the circle
    into x-monotone branch pieces."""
    two_pi = 2.0 * math.pi
    span = theta_hi - theta_lo
    if span >= two_pi - 1e-15:
        return [circle_branch(cx, cy, r, UPPER, cx - r, cx + r, owner),
                circle_branch(cx, cy, r, LOWER, cx - r, cx + r, owner)]
    out = []
    t = theta_lo
    remaining = span
    while remaining > 1e-15:
        tn = math.fmod(t, two_pi)
        if tn < 0.0:
            tn += two_pi
        # distance to the next branch split (theta = 0 or pi mod 2pi)
        if tn < math.pi:
            gap = math.pi - tn
        else:
            gap = two_pi - tn
        step = min(gap, remaining)
        t_end = t + step
        xm0 = cx + r * math.cos(t)
        xm1 = cx + r * math.cos(t_end)
        branch = UPPER if math.sin(t + step / 2.0) >= 0.0 else LOWER
        x_lo, x_hi = (xm0, xm1) if xm0 <= xm1 else (xm1, xm0)
        if x_hi - x_lo > 0.0:
            out.append(circle_branch(cx, cy, r, branch, x_lo, x_hi, owner))
        t = t_end
        remaining -= step
    return out


def ray_clipped_to_box(apex_x: float, apex_y: float, dir_x: float, dir_y: float,
                       x0: float, x1: float, y0: float, y1: float,
                       owner: int = -1) -> Curve | None:
    """Segment = ray from the apex clipped to the closed box, or None."""
    t_lo, t_hi = 0.0, math.inf
    for p, d, lo, hi in ((apex_x, dir_x, x0, x1), (apex_y, dir_y, y0, y1)):
        if d == 0.0:
            if not (lo <= p <= hi):
                return None
        else:
            ta = (lo - p) / d
            tb = (hi - p) / d
            if ta > tb:
                ta, tb = tb, ta
            t_lo = max(t_lo, ta)
            t_hi = min(t_hi, tb)
    if not (t_lo < t_hi):
        return None
    return seg(apex_x + t_lo * dir_x, apex_y + t_lo * dir_y,
               apex_x + t_hi * dir_x, apex_y + t_hi * dir_y, owner)


# ---------------------------------------------------------------------------
# curve x curve intersection points


def _circle_circle(c1x, c1y, r1, c2x, c2y, r2):
    # canonical order for equal radii: keeps exact ties consistent with the
    # scalar/vector pair kernels
    if r1 == r2 and (c2x, c2y) < (c1x, c1y):
        c1x, c1y, c2x, c2y = c2x, c2y, c1x, c1y
    dx = c2x - c1x
    dy = c2y - c1y
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
    mx, my = c1x + a * ux, c1y + a * uy
    return [(mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)]


def _circle_seg(cx, cy, r, sx0, sy0, sx1, sy1):
    dx = sx1 - sx0
    dy = sy1 - sy0
    fx = sx0 - cx
    fy = sy0 - cy
    a = dx * dx + dy * dy
    if a == 0.0:
        return []
    b = 2.0 * (fx * dx + fy * dy)
    c = fx * fx + fy * fy - r * r
    disc = b * b - 4.0 * a * c
    if disc <= 0.0:
        return []
    sq = math.sqrt(disc)
    out = []
    for t in ((-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)):
        if 0.0 <= t <= 1.0:
            out.append((sx0 + t * dx, sy0 + t * dy))
    return out


def _seg_seg(ax0, ay0, ax1, ay1, bx0, by0, bx1, by1):
    rx, ry = ax1 - ax0, ay1 - ay0
    sx, sy = bx1 - bx0, by1 - by0
    denom = rx * sy - ry * sx
    if denom == 0.0:
        return []
    t = ((bx0 - ax0) * sy - (by0 - ay0) * sx) / denom
    u = ((bx0 - ax0) * ry - (by0 - ay0) * rx) / denom
    if 0.0 <= t <= 1.0 and 0.0 <= u <= 1.0:
        return [(ax0 + t * rx, ay0 + t * ry)]
    return []


def curve_intersections(a: Curve, b: Curve) -> list[tuple[float, float]]:
    """Intersection points of two pieces, restricted to both pieces."""
    if a.kind == "arc" and b.kind == "arc":
        if a.circle_key == b.circle_key:
            return []
        pts = _circle_circle(a.cx, a.cy, a.r, b.cx, b.cy, b.r)
    elif a.kind == "arc":
        pts = _circle_seg(a.cx, a.cy, a.r, b.x_lo, b.y_lo, b.x_hi, b.y_hi)
    elif b.kind == "arc":
        pts = _circle_seg(b.cx, b.cy, b.r, a.x_lo, a.y_lo, a.x_hi, a.y_hi)
    else:
        pts = _seg_seg(a.x_lo, a.y_lo, a.x_hi, a.y_hi,
                       b.x_lo, b.y_lo, b.x_hi, b.y_hi)
    return [(x, y) for (x, y) in pts if a.on_piece(x, y) and b.on_piece(x, y)]


def circle_curve_crossing_angles(cx: float, cy: float, r: float,
                                 curve: Curve) -> list[float]:
    """Angles on circle (cx,cy,r) where it meets the given piece."""
    if curve.kind == "arc":
        if (cx, cy, r) == curve.circle_key:
            return []
        pts = _circle_circle(cx, cy, r, curve.cx, curve.cy, curve.r)
    else:
        pts = _circle_seg(cx, cy, r, curve.x_lo, curve.y_lo,
                          curve.x_hi, curve.y_hi)
    return [math.atan2(y - cy, x - cx) for (x, y) in pts
            if curve.on_piece(x, y)]

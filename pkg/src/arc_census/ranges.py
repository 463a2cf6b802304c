"""Counting substructures: interval stabbing, wedge counting, disk counting.

Each structure promises exact counts; the accelerated strategies are
optional and must agree with the brute ones on every input.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import BoundaryCase
from .geom import Point, Wedge


# ---------------------------------------------------------------------------
# interval tree (static, stab counting)


class IntervalTree:
    """Static interval tree over closed intervals [x1, x2]; query_count(x)
    returns the number of intervals containing x."""

    __slots__ = ("center", "lefts", "rights", "left", "right", "size")

    def __init__(self, intervals):
        intervals = [(float(a), float(b)) for a, b in intervals]
        for a, b in intervals:
            if a > b:
                raise ValueError("interval with x1 > x2")
        self._build(intervals)

    def _build(self, intervals):
        self.left = self.right = None
        self.lefts = []
        self.rights = []
        self.size = len(intervals)
        if not intervals:
            self.center = 0.0
            return
        xs = sorted(x for iv in intervals for x in iv)
        self.center = xs[len(xs) // 2]
        here, lo, hi = [], [], []
        for iv in intervals:
            if iv[1] < self.center:
                lo.append(iv)
            elif iv[0] > self.center:
                hi.append(iv)
            else:
                here.append(iv)
        self.lefts = sorted(a for a, _ in here)
        self.rights = sorted(b for _, b in here)
        if lo:
            self.left = IntervalTree.__new__(IntervalTree)
            self.left._build(lo)
        if hi:
            self.right = IntervalTree.__new__(IntervalTree)
            self.right._build(hi)

    def query_count(self, x: float) -> int:
        node = self
        total = 0
        while node is not None:
            if x < node.center:
                total += bisect.bisect_right(node.lefts, x)
                node = node.left
            elif x > node.center:
                total += len(node.rights) - bisect.bisect_left(node.rights, x)
                node = node.right
            else:
                total += len(node.lefts)
                node = None
        return total


def interval_tree_build(intervals) -> IntervalTree:
    return IntervalTree(intervals)


# ---------------------------------------------------------------------------
# wedge counting


def _wedge_dirs(w: Wedge):
    return (math.cos(w.ray_lo), math.sin(w.ray_lo),
            math.cos(w.ray_hi), math.sin(w.ray_hi))


def points_in_wedge_mask(xs: np.ndarray, ys: np.ndarray, w: Wedge) -> np.ndarray:
    ux, uy, vx, vy = _wedge_dirs(w)
    px = xs - w.apex.x
    py = ys - w.apex.y
    return ((ux * py - uy * px >= 0.0) & (px * vy - py * vx >= 0.0))


class _KdNode:
    __slots__ = ("x0", "x1", "y0", "y1", "count", "lo", "hi", "xs", "ys")


def _build_kd(xs, ys, leaf_size=16, depth=0):
    node = _KdNode()
    node.x0, node.x1 = float(xs.min()), float(xs.max())
    node.y0, node.y1 = float(ys.min()), float(ys.max())
    node.count = len(xs)
    node.lo = node.hi = None
    node.xs = node.ys = None
    if len(xs) <= leaf_size:
        node.xs, node.ys = xs, ys
        return node
    if depth % 2 == 0:
        order = np.argsort(xs, kind="stable")
    else:
        order = np.argsort(ys, kind="stable")
    xs, ys = xs[order], ys[order]
    mid = len(xs) // 2
    node.lo = _build_kd(xs[:mid], ys[:mid], leaf_size, depth + 1)
    node.hi = _build_kd(xs[mid:], ys[mid:], leaf_size, depth + 1)
    return node


def _box_in_wedge(node, w: Wedge) -> bool:
    ux, uy, vx, vy = _wedge_dirs(w)
    for x in (node.x0, node.x1):
        for y in (node.y0, node.y1):
            px, py = x - w.apex.x, y - w.apex.y
            if not (ux * py - uy * px >= 0.0 and px * vy - py * vx >= 0.0):
                return False
    return True


def _box_meets_wedge(node, w: Wedge) -> bool:
    # apex inside box
    if node.x0 <= w.apex.x <= node.x1 and node.y0 <= w.apex.y <= node.y1:
        return True
    # a corner inside the wedge
    ux, uy, vx, vy = _wedge_dirs(w)
    for x in (node.x0, node.x1):
        for y in (node.y0, node.y1):
            px, py = x - w.apex.x, y - w.apex.y
            if ux * py - uy * px >= 0.0 and px * vy - py * vx >= 0.0:
                return True
    # a bounding ray crossing the box
    for dx, dy in ((ux, uy), (vx, vy)):
        t_lo, t_hi = 0.0, math.inf
        ok = True
        for p, d, lo, hi in ((w.apex.x, dx, node.x0, node.x1),
                             (w.apex.y, dy, node.y0, node.y1)):
            if d == 0.0:
                if not (lo <= p <= hi):
                    ok = False
                    break
            else:
                ta, tb = (lo - p) / d, (hi - p) / d
                if ta > tb:
                    ta, tb = tb, ta
                t_lo, t_hi = max(t_lo, ta), min(t_hi, tb)
        if ok and t_lo <= t_hi:
            return True
    return False


class WedgeCounter:
    """Exact count of stored points inside closed query wedges (width < pi).

    strategy "brute": vectorized scan per query.
    strategy "partition": kd-tree with conservative cone/box pruning.
    """

    def __init__(self, points: list[Point], strategy: str = "brute"):
        self.strategy = strategy
        self.n = len(points)
        self.xs = np.array([p.x for p in points])
        self.ys = np.array([p.y for p in points])
        self.root = None
        if strategy == "partition" and self.n:
            self.root = _build_kd(self.xs, self.ys)

    def count(self, w: Wedge) -> int:
        if w.width >= math.pi:
            raise ValueError("wedge width must be < pi")
        if self.n == 0:
            return 0
        if self.strategy != "partition":
            return int(points_in_wedge_mask(self.xs, self.ys, w).sum())
        return self._count_node(self.root, w)

    def _count_node(self, node, w: Wedge) -> int:
        if node.xs is not None:
            return int(points_in_wedge_mask(node.xs, node.ys, w).sum())
        if _box_in_wedge(node, w):
            return node.count
        if not _box_meets_wedge(node, w):
            return 0
        return self._count_node(node.lo, w) + self._count_node(node.hi, w)


def wedge_count(wc: WedgeCounter, w: Wedge) -> int:
    return wc.count(w)


# ---------------------------------------------------------------------------
# point-in-disk counting (radius-2 disks)

DISK_RADIUS = 2.0


@dataclass
class DiskContainmentCounter:
    centers: list[Point]
    strategy: str = "brute"


def disk_containment_count(points: list[Point], disks: list[Point],
                           strategy: str = "brute",
                           eps: float | None = None,
                           check_boundary: bool = True) -> int:
    """Number of (point, disk) pairs with the point strictly inside the
    radius-2 disk.  Raises BoundaryCase when a distance sits within eps
    of the disk radius (skippable for margin-validated pipeline calls)."""
    if eps is None:
        eps = config.EPS
    if not points or not disks:
        return 0
    if strategy == "cutting":
        if check_boundary:
            _disk_boundary_check(points, disks, eps)
        from .regions import disk_count_via_cutting
        return disk_count_via_cutting(points, disks)
    px = np.array([p.x for p in points])
    py = np.array([p.y for p in points])
    cx = np.array([c.x for c in disks])
    cy = np.array([c.y for c in disks])
    total = 0
    near_lo = (DISK_RADIUS - eps) ** 2
    near_hi = (DISK_RADIUS + eps) ** 2
    for i0 in range(0, len(points), 1024):
        i1 = min(i0 + 1024, len(points))
        d2 = ((px[i0:i1, None] - cx[None, :]) ** 2
              + (py[i0:i1, None] - cy[None, :]) ** 2)
        if check_boundary and bool(((d2 >= near_lo) & (d2 <= near_hi)).any()):
            raise BoundaryCase("point within eps of a disk boundary")
        total += int((d2 < DISK_RADIUS ** 2).sum())
    return total


def _disk_boundary_check(points, disks, eps):
    px = np.array([p.x for p in points])
    py = np.array([p.y for p in points])
    cx = np.array([c.x for c in disks])
    cy = np.array([c.y for c in disks])
    near_lo = (DISK_RADIUS - eps) ** 2
    near_hi = (DISK_RADIUS + eps) ** 2
    for i0 in range(0, len(points), 1024):
        i1 = min(i0 + 1024, len(points))
        d2 = ((px[i0:i1, None] - cx[None, :]) ** 2
              + (py[i0:i1, None] - cy[None, :]) ** 2)
        if bool(((d2 >= near_lo) & (d2 <= near_hi)).any()):
            raise BoundaryCase("point within eps of a disk boundary")

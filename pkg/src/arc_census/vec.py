"""Vectorized geometry kernels.

Struct-of-arrays views over arc lists power the brute-force oracle and every
pairwise-scan fallback.  The scalar predicates in ``geom`` are the reference
semantics; these kernels must agree with them bit-for-bit on the comparisons
that matter (same closed-interval conventions, same formulas).
"""

from __future__ import annotations

import math

import numpy as np

from .geom import TWO_PI, UnitArc

__all__ = [
    "ArcArrays",
    "pair_crossing_counts",
    "pair_crossing_points",
    "crossing_count_matrix",
    "total_crossings_all_pairs",
]


class ArcArrays:
    """Column view of a list of UnitArcs."""

    def __init__(self, arcs: list[UnitArc]):
        n = len(arcs)
        self.n = n
        self.cx = np.empty(n)
        self.cy = np.empty(n)
        self.t0 = np.empty(n)
        self.span = np.empty(n)
        self.ids = np.empty(n, dtype=np.int64)
        self.base = np.empty(n, dtype=np.int64)
        for i, a in enumerate(arcs):
            self.cx[i] = a.center.x
            self.cy[i] = a.center.y
            self.t0[i] = a.theta_start
            self.span[i] = a.span
            self.ids[i] = a.id
            self.base[i] = a.base_id


def _contains_angle(theta, t0, span):
    # mirrors geom.UnitArc.contains_angle bit for bit (C fmod semantics)
    d = np.fmod(theta - t0, TWO_PI)
    d = np.where(d < 0.0, d + TWO_PI, d)
    return d <= span


def _pair_points_raw(cxa, cya, cxb, cyb):
    """Unit circle pair intersection points.

    Operation-for-operation the same arithmetic as
    geom.circle_circle_points with r1 = r2 = 1, including the canonical
    center ordering, so exact ties (points landing on piece endpoints)
    resolve identically in both code paths.
    Returns (ok, px1, py1, px2, py2) where ok marks crossing circles."""
    swap = (cxb < cxa) | ((cxb == cxa) & (cyb < cya))
    c1x = np.where(swap, cxb, cxa)
    c1y = np.where(swap, cyb, cya)
    c2x = np.where(swap, cxa, cxb)
    c2y = np.where(swap, cya, cyb)
    dx = c2x - c1x
    dy = c2y - c1y
    d2 = dx * dx + dy * dy
    ok = (d2 > 0.0) & (d2 < 4.0)
    d2s = np.where(ok, d2, 1.0)
    d = np.sqrt(d2s)
    a = (d2s + 1.0 - 1.0) / (2.0 * d)
    h2 = 1.0 - a * a
    ok = ok & (h2 > 0.0)
    h = np.sqrt(np.maximum(h2, 0.0))
    ux = dx / d
    uy = dy / d
    mx = c1x + a * ux
    my = c1y + a * uy
    px1 = mx - h * uy
    py1 = my + h * ux
    px2 = mx + h * uy
    py2 = my - h * ux
    return ok, px1, py1, px2, py2


def pair_crossing_counts(A: ArcArrays, ia, B: ArcArrays, ib):
    """Crossing counts (0/1/2) for index-aligned pairs (A[ia[k]], B[ib[k]])."""
    cxa, cya = A.cx[ia], A.cy[ia]
    cxb, cyb = B.cx[ib], B.cy[ib]
    ok, px1, py1, px2, py2 = _pair_points_raw(cxa, cya, cxb, cyb)
    counts = np.zeros(len(px1), dtype=np.int64)
    for px, py in ((px1, py1), (px2, py2)):
        ta = np.arctan2(py - cya, px - cxa)
        tb = np.arctan2(py - cyb, px - cxb)
        on = (_contains_angle(ta, A.t0[ia], A.span[ia])
              & _contains_angle(tb, B.t0[ib], B.span[ib]))
        counts += (ok & on)
    return counts


def pair_crossing_points(A: ArcArrays, ia, B: ArcArrays, ib):
    """Like pair_crossing_counts but also returns the two candidate points
    and their on-both-arcs masks: (on1, x1, y1, on2, x2, y2)."""
    cxa, cya = A.cx[ia], A.cy[ia]
    cxb, cyb = B.cx[ib], B.cy[ib]
    ok, px1, py1, px2, py2 = _pair_points_raw(cxa, cya, cxb, cyb)
    masks = []
    for px, py in ((px1, py1), (px2, py2)):
        ta = np.arctan2(py - cya, px - cxa)
        tb = np.arctan2(py - cyb, px - cxb)
        on = (ok & _contains_angle(ta, A.t0[ia], A.span[ia])
              & _contains_angle(tb, B.t0[ib], B.span[ib]))
        masks.append(on)
    return masks[0], px1, py1, masks[1], px2, py2


def crossing_count_matrix(A: ArcArrays, B: ArcArrays):
    """Dense |A| x |B| crossing-count matrix (0/1/2 per pair)."""
    ia = np.repeat(np.arange(A.n), B.n)
    ib = np.tile(np.arange(B.n), A.n)
    return pair_crossing_counts(A, ia, B, ib).reshape(A.n, B.n)


def total_crossings_all_pairs(A: ArcArrays, pair_budget: int = 4_000_000) -> int:
    """Sum of crossing counts over unordered pairs of distinct arcs.

    Deliberately quadratic: evaluates every pair, in blocks sized to keep
    peak memory around ``pair_budget`` pairs."""
    n = A.n
    if n < 2:
        return 0
    block = max(1, pair_budget // n)
    total = 0
    for i0 in range(0, n - 1, block):
        i1 = min(i0 + block, n - 1)
        cols = np.arange(i0 + 1, n)
        ia = np.repeat(np.arange(i0, i1), len(cols))
        ib = np.tile(cols, i1 - i0)
        keep = ib > ia
        total += int(pair_crossing_counts(A, ia[keep], A, ib[keep]).sum())
    return total

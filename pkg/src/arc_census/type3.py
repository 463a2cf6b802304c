"""Counting long-red vs short-blue crossings inside one pseudo-trapezoid.

Single crossings split by the shape of the long arc: ``full`` long arcs are
characterized by lune membership of their center; ``partial`` ones split
further by whether the blue arc also meets the coupled component, decided
by coordinate comparisons against the coupled-side endpoint z.

Double crossings are counted as (pairs satisfying the four wedge/lune/
distance conditions) minus (pairs that cross the arc and its coupled
component once each while the blue center lies in the long arc's wedge).
The subtrahend keeps the identity exact: a blue arc can meet both
components with its center outside the long arc's wedge, and such pairs
never enter the four-condition count.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

import numpy as np

from . import config
from .geom import Point, UnitArc, in_lune_core, in_lune_prime_core
from .ranges import IntervalTree, WedgeCounter
from .regions import (BOX_PAD, Region, RegionIndex, clip_circle_to_box,
                      disk_region, padded_box)
from .trim import Separation, TrimmedArc
from .vec import ArcArrays, pair_crossing_counts


def _u_of(p: Point, axis: str) -> float:
    return p.x if axis == "x" else p.y


def _in_wedge_xy(px, py, apex: Point, e0: Point, e1: Point):
    """Vectorizable closed-wedge test (CCW sector apex->e0..e1, width<pi)."""
    ux, uy = e0.x - apex.x, e0.y - apex.y
    vx, vy = e1.x - apex.x, e1.y - apex.y
    dx, dy = px - apex.x, py - apex.y
    return (ux * dy - uy * dx >= 0.0) & (dx * vy - dy * vx >= 0.0)


@dataclass
class Type3Counts:
    t311: int = 0
    t3121: int = 0
    t3122: int = 0
    t32: int = 0       # twice-crossing pairs
    extra: int = 0     # single crossings of shape-"other" long arcs
    k2: int = 0
    k3_wedge: int = 0

    def points(self) -> int:
        return self.t311 + self.t3121 + self.t3122 + self.extra + 2 * self.t32

    def add(self, other: "Type3Counts"):
        self.t311 += other.t311
        self.t3121 += other.t3121
        self.t3122 += other.t3122
        self.t32 += other.t32
        self.extra += other.extra
        self.k2 += other.k2
        self.k3_wedge += other.k3_wedge


def _coupled_cross_count(blue: UnitArc, red: TrimmedArc) -> int:
    cd = red.coupled
    if cd is None:
        return 0
    coupled = UnitArc(-1, red.piece.center, cd.comp_lo, cd.comp_hi)
    from .geom import arc_pair_crossing_count
    return arc_pair_crossing_count(blue, coupled)


def _scan_pairs(reds: list[TrimmedArc], blues: list[TrimmedArc],
                same_group: bool, out: Type3Counts):
    if not reds or not blues:
        return
    A = ArcArrays([t.piece for t in reds])
    B = ArcArrays([t.piece for t in blues])
    A.base = np.array([t.base_id for t in reds], dtype=np.int64)
    B.base = np.array([t.base_id for t in blues], dtype=np.int64)
    ia = np.repeat(np.arange(A.n), B.n)
    ib = np.tile(np.arange(B.n), A.n)
    if same_group:
        keep = A.base[ia] != B.base[ib]
        ia, ib = ia[keep], ib[keep]
    if len(ia) == 0:
        return
    counts = pair_crossing_counts(A, ia, B, ib)
    out.t32 += int((counts == 2).sum())
    ones = np.nonzero(counts == 1)[0]
    for k in ones:
        red = reds[int(ia[k])]
        blue = blues[int(ib[k])]
        if red.shape == "full":
            out.t311 += 1
        elif red.shape == "partial":
            if _coupled_cross_count(blue.piece, red) >= 1:
                out.t3122 += 1
            else:
                out.t3121 += 1
        else:
            out.extra += 1


# ---------------------------------------------------------------------------
# machinery payloads


class _LunePayload:
    __slots__ = ("count", "frees", "free_by_rid")

    def __init__(self, cell, regions, axis):
        self.count = len(regions)
        rx, ry = cell.ref_point()
        frees = []
        self.free_by_rid = {}
        for reg in regions:
            e0, e1 = reg.data.piece.endpoints()
            d0 = (rx - e0.x) ** 2 + (ry - e0.y) ** 2
            free = e1 if d0 < 1.0 else e0
            u = _u_of(free, axis)
            frees.append(u)
            self.free_by_rid[reg.rid] = u
        frees.sort()
        self.frees = frees


class _PrimePayload:
    __slots__ = ("tree", "u0", "u1", "cbx", "cby", "by_rid")

    def __init__(self, cell, regions, axis):
        ivs = []
        self.by_rid = {}
        u0s, u1s, cbx, cby = [], [], [], []
        for reg in regions:
            e0, e1 = reg.data.piece.endpoints()
            a, b = _u_of(e0, axis), _u_of(e1, axis)
            if a > b:
                a, b = b, a
            ivs.append((a, b))
            c = reg.data.piece.center
            u0s.append(a)
            u1s.append(b)
            cbx.append(c.x)
            cby.append(c.y)
            self.by_rid[reg.rid] = (a, b, c)
        self.tree = IntervalTree(ivs)
        self.u0 = np.array(u0s)
        self.u1 = np.array(u1s)
        self.cbx = np.array(cbx)
        self.cby = np.array(cby)


class _InnerScanPayload:
    __slots__ = ("cbx", "cby")

    def __init__(self, regions):
        self.cbx = np.array([reg.data.piece.center.x for reg in regions])
        self.cby = np.array([reg.data.piece.center.y for reg in regions])


class _InnerDiskPayload:
    """Radius-2 disk index over the blue centers with per-cell wedge
    counters, for large canonical sets."""

    __slots__ = ("index",)

    def __init__(self, regions, box, rng):
        disks = []
        for j, reg in enumerate(regions):
            c = reg.data.piece.center
            d = disk_region(j, j, c, 2.0, box)
            d.data = reg.data
            d.base_id = reg.base_id
            disks.append(d)
        m = len(disks)
        r = max(1.0, m / max(math.log2(m + 2), 1.0))
        self.index = RegionIndex(
            disks, box, r, rng,
            payload_builder=lambda cell, regs: WedgeCounter(
                [reg.data.piece.center for reg in regs], "brute"))

    def count(self, q: Point, wedge_pts, exclude_base):
        apex, e0, e1 = wedge_pts
        from .geom import Wedge
        qx, qy = q.x, q.y

        def fold(cell, wc):
            t0 = math.atan2(e0.y - apex.y, e0.x - apex.x)
            t1 = math.atan2(e1.y - apex.y, e1.x - apex.x)
            return wc.count(Wedge(apex, t0, t1))

        def eval_region(reg):
            c = reg.data.piece.center
            inside = (qx - c.x) ** 2 + (qy - c.y) ** 2 < 4.0
            return 1 if inside and bool(_in_wedge_xy(c.x, c.y, apex, e0, e1)) else 0

        def excl(cell, reg):
            c = reg.data.piece.center
            return 1 if bool(_in_wedge_xy(c.x, c.y, apex, e0, e1)) else 0

        return self.index.query(qx, qy, fold, eval_region,
                                exclude_base=exclude_base,
                                excluded_value=excl)


# ---------------------------------------------------------------------------
# machinery


def _lune_member(e0: Point, e1: Point):
    def member(x: float, y: float) -> bool:
        i0 = (x - e0.x) ** 2 + (y - e0.y) ** 2 < 1.0
        i1 = (x - e1.x) ** 2 + (y - e1.y) ** 2 < 1.0
        return i0 != i1
    return member


def _prime_member(e0: Point, e1: Point):
    def member(x: float, y: float) -> bool:
        return ((x - e0.x) ** 2 + (y - e0.y) ** 2 > 1.0
                and (x - e1.x) ** 2 + (y - e1.y) ** 2 > 1.0)
    return member


def _interesting_member(blue: UnitArc):
    e0, e1 = blue.endpoints()
    c = blue.center

    def member(x: float, y: float) -> bool:
        if not bool(_in_wedge_xy(x, y, c, e0, e1)):
            return False
        return ((x - e0.x) ** 2 + (y - e0.y) ** 2 > 1.0
                and (x - e1.x) ** 2 + (y - e1.y) ** 2 > 1.0)
    return member


def _machinery_group(reds: list[TrimmedArc], blues: list[TrimmedArc],
                     red_box, sep: Separation, same_group: bool,
                     rng: np.random.Generator, out: Type3Counts):
    from .curves import ray_clipped_to_box

    axis = sep.axis or "x"
    m = len(blues)
    pbox = padded_box(red_box)

    lune_regions, prime_regions = [], []
    for i, t in enumerate(blues):
        e0, e1 = t.piece.endpoints()
        curves = (clip_circle_to_box(e0.x, e0.y, 1.0, pbox, owner=i)
                  + clip_circle_to_box(e1.x, e1.y, 1.0, pbox, owner=i))
        lune_regions.append(Region(i, i, curves, _lune_member(e0, e1),
                                   data=t, base_id=t.base_id))
        prime_regions.append(Region(i, i, curves, _prime_member(e0, e1),
                                    data=t, base_id=t.base_id))
    r_lune = max(1.0, m / (math.log2(m + 2) ** 2))
    idx_lune = RegionIndex(lune_regions, red_box, r_lune, rng,
                           payload_builder=lambda cell, regs:
                           _LunePayload(cell, regs, axis))
    idx_prime = RegionIndex(prime_regions, red_box, r_lune, rng,
                            payload_builder=lambda cell, regs:
                            _PrimePayload(cell, regs, axis),
                            cutting=idx_lune.cutting)

    int_regions = []
    for i, t in enumerate(blues):
        e0, e1 = t.piece.endpoints()
        c = t.piece.center
        curves = (clip_circle_to_box(e0.x, e0.y, 1.0, pbox, owner=i)
                  + clip_circle_to_box(e1.x, e1.y, 1.0, pbox, owner=i))
        for e in (e0, e1):
            ray = ray_clipped_to_box(c.x, c.y, e.x - c.x, e.y - c.y,
                                     *pbox, owner=i)
            if ray is not None:
                curves.append(ray)
        int_regions.append(Region(i, i, curves, _interesting_member(t.piece),
                                  data=t, base_id=t.base_id))

    def inner_payload(cell, regs):
        if len(regs) < config.SMALL_INPUT:
            return _InnerScanPayload(regs)
        return _InnerDiskPayload(regs, red_box, rng)

    r_int = max(1.0, m / (math.log2(m + 2) ** 2))
    idx_int = RegionIndex(int_regions, red_box, r_int, rng,
                          payload_builder=inner_payload)

    k2_local = 0
    k3w_local = 0
    for red in reds:
        q = red.piece.center
        re0, re1 = red.piece.endpoints()
        excl = red.base_id if same_group else None

        if red.shape == "full":
            out.t311 += idx_lune.query(
                q.x, q.y,
                fold_cell=lambda cell, pl: pl.count,
                eval_region=lambda reg: 1 if in_lune_core(q, reg.data.piece) else 0,
                exclude_base=excl,
                excluded_value=lambda cell, reg: 1)
        elif red.coupled is not None:
            cd = red.coupled
            z_u, away = cd.z_u, cd.away

            def fold_3121(cell, pl, z_u=z_u, away=away):
                if away < 0:
                    return bisect.bisect_left(pl.frees, z_u)
                return len(pl.frees) - bisect.bisect_right(pl.frees, z_u)

            def eval_3121(reg, q=q, z_u=z_u, away=away):
                blue = reg.data.piece
                if not in_lune_core(q, blue):
                    return 0
                e0, e1 = blue.endpoints()
                d0 = (q.x - e0.x) ** 2 + (q.y - e0.y) ** 2
                free = e1 if d0 < 1.0 else e0
                u = _u_of(free, cd.axis)
                return 1 if (u < z_u if away < 0 else u > z_u) else 0

            def excl_3121(cell, reg, z_u=z_u, away=away):
                pl = idx_lune.payload.get(id(cell))
                u = pl.free_by_rid[reg.rid]
                return 1 if (u < z_u if away < 0 else u > z_u) else 0

            out.t3121 += idx_lune.query(q.x, q.y, fold_3121, eval_3121,
                                        exclude_base=excl,
                                        excluded_value=excl_3121)

            def fold_3122(cell, pl, z_u=z_u):
                return pl.tree.query_count(z_u)

            def eval_3122(reg, q=q, z_u=z_u):
                blue = reg.data.piece
                if not in_lune_prime_core(q, blue):
                    return 0
                e0, e1 = blue.endpoints()
                a, b = _u_of(e0, cd.axis), _u_of(e1, cd.axis)
                if a > b:
                    a, b = b, a
                return 1 if a <= z_u <= b else 0

            def excl_3122(cell, reg, z_u=z_u):
                pl = idx_prime.payload.get(id(cell))
                a, b, _c = pl.by_rid[reg.rid]
                return 1 if a <= z_u <= b else 0

            out.t3122 += idx_prime.query(q.x, q.y, fold_3122, eval_3122,
                                         exclude_base=excl,
                                         excluded_value=excl_3122)

            def fold_k3w(cell, pl, z_u=z_u):
                mask = (pl.u0 <= z_u) & (pl.u1 >= z_u)
                mask &= _in_wedge_xy(pl.cbx, pl.cby, q, re0, re1)
                return int(mask.sum())

            def eval_k3w(reg, q=q, z_u=z_u):
                if eval_3122(reg) == 0:
                    return 0
                c = reg.data.piece.center
                return 1 if bool(_in_wedge_xy(c.x, c.y, q, re0, re1)) else 0

            def excl_k3w(cell, reg, z_u=z_u):
                pl = idx_prime.payload.get(id(cell))
                a, b, c = pl.by_rid[reg.rid]
                if not (a <= z_u <= b):
                    return 0
                return 1 if bool(_in_wedge_xy(c.x, c.y, q, re0, re1)) else 0

            k3w_local += idx_prime.query(q.x, q.y, fold_k3w, eval_k3w,
                                         exclude_base=excl,
                                         excluded_value=excl_k3w)

        # four-condition count (all canonical long reds)
        def fold_k2(cell, pl):
            if isinstance(pl, _InnerScanPayload):
                d2 = (pl.cbx - q.x) ** 2 + (pl.cby - q.y) ** 2
                mask = (d2 < 4.0) & (d2 > 0.0)
                mask &= _in_wedge_xy(pl.cbx, pl.cby, q, re0, re1)
                return int(mask.sum())
            return pl.count(q, (q, re0, re1), excl)

        def eval_k2(reg):
            blue = reg.data.piece
            if not _interesting_member(blue)(q.x, q.y):
                return 0
            c = blue.center
            d2 = (q.x - c.x) ** 2 + (q.y - c.y) ** 2
            if not (0.0 < d2 < 4.0):
                return 0
            return 1 if bool(_in_wedge_xy(c.x, c.y, q, re0, re1)) else 0

        def excl_k2(cell, reg):
            pl = idx_int.payload.get(id(cell))
            if isinstance(pl, _InnerDiskPayload):
                return 0
            c = reg.data.piece.center
            d2 = (q.x - c.x) ** 2 + (q.y - c.y) ** 2
            if not (0.0 < d2 < 4.0):
                return 0
            return 1 if bool(_in_wedge_xy(c.x, c.y, q, re0, re1)) else 0

        k2_local += idx_int.query(q.x, q.y, fold_k2, eval_k2,
                                  exclude_base=excl, excluded_value=excl_k2)

    out.k2 += k2_local
    out.k3_wedge += k3w_local
    out.t32 += k2_local - k3w_local


def machinery_eligible(t: TrimmedArc, sep: Separation) -> bool:
    """Long pieces the region machinery can characterize; the rest go to
    ownership scans."""
    if t.resident or t.shape == "other":
        return False
    if t.shape == "partial":
        return sep.axis is not None and t.coupled is not None
    return t.shape == "full"


def machinery_counts(mach_reds: list[TrimmedArc], mach_blues: list[TrimmedArc],
                     red_box, sep: Separation, same_group: bool,
                     rng: np.random.Generator, n_tau: int,
                     grouping: str = "auto") -> Type3Counts:
    """Machinery-only long-red vs short-blue counting, with the short-blue
    grouping trick when the short side dominates."""
    out = Type3Counts()
    m = len(mach_blues)
    if m == 0 or not mach_reds:
        return out
    group_size = m
    threshold = math.sqrt(max(n_tau, 1)) * math.log2(m + 2)
    if grouping == "force" or (grouping == "auto" and m >= threshold):
        t_groups = max(1, int(m / threshold)) if threshold > 0 else 1
        group_size = max(1, math.ceil(m / t_groups))
    for g0 in range(0, m, group_size):
        group = mach_blues[g0:g0 + group_size]
        _machinery_group(mach_reds, group, red_box, sep, same_group, rng, out)
    return out

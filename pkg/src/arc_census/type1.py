"""Counting crossings between two sets of long pieces inside one cell.

Single crossings go through a pluggable once-counter whose baseline is a
vectorized pairwise scan.  Double crossings use the five-condition
characterization (each center in the other's wedge, each disk free of the
other's endpoints, circles crossing) factored through two nested cuttings:
an outer one over the wedge-and-lune regions of one side (conditions 1-2),
and per canonical cell an inner one over the other side's regions
(conditions 3-4), finishing with batched point-in-disk counting
(condition 5).  Unresolved pairs at the leaves fall back to direct scans
on basic subsets.
"""

from __future__ import annotations

import math

import numpy as np

from . import config
from .cutting import locate_path
from .ranges import disk_containment_count
from .regions import Region, RegionIndex, clip_circle_to_box, padded_box
from .trim import TrimmedArc
from .vec import ArcArrays, pair_crossing_counts


def _pair_counts(X: list[TrimmedArc], Y: list[TrimmedArc], same_group: bool):
    A = ArcArrays([t.piece for t in X])
    B = ArcArrays([t.piece for t in Y])
    basea = np.array([t.base_id for t in X], dtype=np.int64)
    baseb = np.array([t.base_id for t in Y], dtype=np.int64)
    ia = np.repeat(np.arange(A.n), B.n)
    ib = np.tile(np.arange(B.n), A.n)
    if same_group:
        keep = basea[ia] != baseb[ib]
        ia, ib = ia[keep], ib[keep]
    if len(ia) == 0:
        return np.zeros(0, dtype=np.int64)
    return pair_crossing_counts(A, ia, B, ib)


def scan_once_twice(X: list[TrimmedArc], Y: list[TrimmedArc],
                    same_group: bool) -> tuple[int, int]:
    """(#once-pairs, #twice-pairs) by direct scan over piece pairs."""
    if not X or not Y:
        return 0, 0
    counts = _pair_counts(X, Y, same_group)
    if len(counts) == 0:
        return 0, 0
    return int((counts == 1).sum()), int((counts == 2).sum())


def count_once_pairs(X: list[TrimmedArc], Y: list[TrimmedArc],
                     same_group: bool) -> int:
    """Pluggable single-crossing counter; baseline is the pairwise scan."""
    return scan_once_twice(X, Y, same_group)[0]


# ---------------------------------------------------------------------------
# five-condition machinery for twice-crossing pairs


def _wedge_lune_region(rid: int, t: TrimmedArc, box) -> Region:
    from .curves import ray_clipped_to_box
    from .type3 import _interesting_member
    e0, e1 = t.piece.endpoints()
    c = t.piece.center
    pbox = padded_box(box)
    curves = (clip_circle_to_box(e0.x, e0.y, 1.0, pbox, owner=rid)
              + clip_circle_to_box(e1.x, e1.y, 1.0, pbox, owner=rid))
    for e in (e0, e1):
        ray = ray_clipped_to_box(c.x, c.y, e.x - c.x, e.y - c.y, *pbox,
                                 owner=rid)
        if ray is not None:
            curves.append(ray)
    return Region(rid, rid, curves, _interesting_member(t.piece),
                  data=t, base_id=t.base_id)


def _scan_345(B: list[TrimmedArc], R: list[TrimmedArc],
              same_group: bool) -> int:
    """Pairs (b, r) with: c_b inside wedge(r), both endpoint disks of r
    avoiding c_b, circles crossing (conditions 3-5 of the twice test)."""
    from .type3 import _in_wedge_xy
    total = 0
    for r in R:
        q0, q1 = r.piece.endpoints()
        c_r = r.piece.center
        for b in B:
            if same_group and b.base_id == r.base_id:
                continue
            cb = b.piece.center
            d2 = (cb.x - c_r.x) ** 2 + (cb.y - c_r.y) ** 2
            if not (0.0 < d2 < 4.0):
                continue
            if (cb.x - q0.x) ** 2 + (cb.y - q0.y) ** 2 <= 1.0:
                continue
            if (cb.x - q1.x) ** 2 + (cb.y - q1.y) ** 2 <= 1.0:
                continue
            if bool(_in_wedge_xy(cb.x, cb.y, c_r, q0, q1)):
                total += 1
    return total


def _count_345(B: list[TrimmedArc], R: list[TrimmedArc], box_B,
               same_group: bool, rng: np.random.Generator) -> int:
    """Conditions (3,4,5) count over B x R; the caller guarantees (1,2)
    hold for every pair in scope.  Cutting over the R-side regions clipped
    to the B-side center cell, point-in-disk counting per canonical cell."""
    n = len(B)
    m = len(R)
    if n == 0 or m == 0:
        return 0
    if n + m < config.SMALL_INPUT or m * m < n * (math.log2(n + 2) ** 2):
        return _scan_345(B, R, same_group)
    r_cut = math.ceil((m * m / (n * (math.log2(n + 2) ** 2))) ** (1.0 / 3.0))
    regions = [_wedge_lune_region(i, t, box_B) for i, t in enumerate(R)]
    idx = RegionIndex(regions, box_B, r_cut, rng)
    total = 0
    located: dict[int, list[TrimmedArc]] = {}
    leaf_of: dict[int, list[TrimmedArc]] = {}
    for b in B:
        c = b.piece.center
        path = locate_path(idx.cutting, c.x, c.y)
        for cell in path:
            if id(cell) in idx.newly:
                located.setdefault(id(cell), []).append(b)
        leaf_of.setdefault(id(path[-1]), []).append(b)
    for key, blist in located.items():
        regs = idx.newly[key]
        pts = [b.piece.center for b in blist]
        disks = [reg.data.piece.center for reg in regs]
        total += disk_containment_count(pts, disks, strategy="brute",
                                        check_boundary=False)
    for leaf in idx.cutting.leaves:
        blist = leaf_of.get(id(leaf))
        if not blist:
            continue
        owners = sorted({c.owner for c in leaf.items})
        if owners:
            total += _scan_345(blist, [regions[o].data for o in owners],
                               same_group)
    return total


def count_twice_pairs_ll(B: list[TrimmedArc], R: list[TrimmedArc],
                         box_R, box_B, same_group: bool,
                         rng: np.random.Generator, depth: int = 0) -> int:
    """Pairs (b in B, r in R) of long pieces crossing exactly twice."""
    n = len(B) + len(R)
    m = len(B)
    if m == 0 or not R:
        return 0
    if (depth >= 2 or n < config.SMALL_INPUT
            or n * n < m * (math.log2(m + 2) ** 2)):
        return scan_once_twice(B, R, same_group)[1]
    r_cut = math.ceil((n * n / (m * (math.log2(m + 2) ** 2))) ** (1.0 / 3.0))
    regions = [_wedge_lune_region(i, t, box_R) for i, t in enumerate(B)]
    idx = RegionIndex(regions, box_R, r_cut, rng)
    total = 0
    located: dict[int, list[TrimmedArc]] = {}
    leaf_of: dict[int, list[TrimmedArc]] = {}
    for r in R:
        c = r.piece.center
        path = locate_path(idx.cutting, c.x, c.y)
        for cell in path:
            if id(cell) in idx.newly:
                located.setdefault(id(cell), []).append(r)
        leaf_of.setdefault(id(path[-1]), []).append(r)
    for key, rlist in located.items():
        blist = [reg.data for reg in idx.newly[key]]
        total += _count_345(blist, rlist, box_B, same_group, rng)
    basic_cap = max(1, int(n / (r_cut * r_cut)))
    for leaf in idx.cutting.leaves:
        rlist = leaf_of.get(id(leaf))
        if not rlist:
            continue
        owners = sorted({c.owner for c in leaf.items})
        if not owners:
            continue
        b_unres = [regions[o].data for o in owners]
        for i0 in range(0, len(rlist), basic_cap):
            chunk = rlist[i0:i0 + basic_cap]
            total += count_twice_pairs_ll(b_unres, chunk, box_R, box_B,
                                          same_group, rng, depth + 1)
    return total


def count_long_long_points(X: list[TrimmedArc], Y: list[TrimmedArc],
                           box_X, box_Y, same_group: bool,
                           rng: np.random.Generator,
                           force_scan: bool = False) -> tuple[int, int, int]:
    """(points, once_pairs, twice_pairs) between two long piece sets whose
    crossings all lie inside the current cell."""
    if not X or not Y:
        return 0, 0, 0
    if force_scan or len(X) + len(Y) < config.SMALL_INPUT:
        once, twice = scan_once_twice(X, Y, same_group)
        return once + 2 * twice, once, twice
    once = count_once_pairs(X, Y, same_group)
    twice = count_twice_pairs_ll(X, Y, box_Y, box_X, same_group, rng)
    return once + 2 * twice, once, twice

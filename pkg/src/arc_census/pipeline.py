"""The full counting pipeline.

count_all: grid cover -> per-cell subproblems -> per-center-cell-pair
decomposition -> per-leaf type (2)/(3)/(4) counting plus the hierarchical
type (1) pass.  Every intersection point is attributed to the unique grid
cell and cutting cell owning it (half-open), so contributions sum exactly.

Scan counters evaluate crossing points of clip pairs directly and filter by
cell ownership; predicate machinery runs only on pieces it can characterize
(non-resident, canonical shapes) so no machinery decision ever rides on an
exact boundary tie.
"""

from __future__ import annotations

import math
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import config
from .cutting import locate_path
from .decomp import PairDecomposition, cutting_r_for
from .errors import DegenerateInput, OnBoundary
from .geom import Point, UnitArc, circle_circle_points
from .grid import (GridCover, build_grid_cover, cell_key_for_point,
                   cells_intersecting_arc)
from .oracle import require_general_position
from .trim import ClippedArc, Separation,clip_arcs_to_cell, separation_of
from .type1 import count_once_pairs, count_twice_pairs_ll, scan_once_twice
from .type3 import Type3Counts, machinery_counts, machinery_eligible

TYPE_KEYS = ("t1", "t2", "t3", "t4", "t311", "t3121", "t3122", "t32",
             "t111", "t112")

DEBUG_POINTS: list | None = None


@dataclass
class PipelineOptions:
    small_input: int = -1          # -1: use config.SMALL_INPUT
    grouping: str = "auto"         # off | auto | force
    type3_machinery: bool = True
    type1_machinery: bool = True
    instrument_type1: bool = False
    threads: int = 1
    seed: int = 0
    validate: bool = True
    margin: float | None = None

    def resolve_small(self) -> int:
        return config.SMALL_INPUT if self.small_input < 0 else self.small_input


@dataclass
class CountReport:
    total: int = 0
    by_type: dict = field(default_factory=lambda: {k: 0 for k in TYPE_KEYS})
    diagnostics: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"total": self.total, "by_type": dict(self.by_type),
                "diagnostics": dict(self.diagnostics)}


def _bump(report_types: dict, key: str, value: int = 1):
    report_types[key] = report_types.get(key, 0) + value


# ---------------------------------------------------------------------------
# pair crossing points (clip level, cached per subproblem)


class _PairPoints:
    def __init__(self):
        self.cache: dict[tuple[int, int], list[tuple[float, float]]] = {}

    def of(self, a: ClippedArc, b: ClippedArc) -> list[tuple[float, float]]:
        key = (a.cid, b.cid) if a.cid <= b.cid else (b.cid, a.cid)
        pts = self.cache.get(key)
        if pts is None:
            pts = []
            for p in circle_circle_points(a.base.center, 1.0,
                                          b.base.center, 1.0):
                ta = math.atan2(p.y - a.base.center.y, p.x - a.base.center.x)
                tb = math.atan2(p.y - b.base.center.y, p.x - b.base.center.x)
                if (a.piece.contains_angle(ta) and b.piece.contains_angle(tb)):
                    pts.append((p.x, p.y))
            self.cache[key] = pts
        return pts


# ---------------------------------------------------------------------------
# one cell-pair subproblem


@dataclass
class PairOutcome:
    total: int = 0
    types: dict = field(default_factory=dict)
    diag: dict = field(default_factory=dict)
    attributions: list = field(default_factory=list)


def count_cell_pair(cell_key, box, clips1: list[ClippedArc],
                    clips2: list[ClippedArc], box1, box2,
                    sep1: Separation, sep2: Separation, same_group: bool,
                    rng: np.random.Generator,
                    opts: PipelineOptions) -> PairOutcome:
    """Count crossing points inside the cell between the two clip sets
    (bichromatic; for same_group the sets coincide and base pairs are
    counted once, halving at the end)."""
    out = PairOutcome()
    small = opts.resolve_small()
    if not clips1 or not clips2:
        return out
    dec = PairDecomposition(box, clips1, clips2, rng)
    pair_pts = _PairPoints()
    path_cache: dict[tuple[float, float], list] = {}

    def owner_path(pt):
        path = path_cache.get(pt)
        if path is None:
            try:
                path = locate_path(dec.cutting, pt[0], pt[1], lenient=True)
            except OnBoundary:
                path = []
            path_cache[pt] = path
        return path

    def scan_pairs_leaf(leaf, pieces_a, pieces_b, bucket):
        """Count crossing points lying on piece pairs of this cell.

        Piece stretches partition each arc across a level's cells, so a
        crossing is co-habited by pieces of both arcs in exactly one cell
        even when it sits on a cell boundary.  Pairs where both arcs were
        retired into the cutting are skipped: their crossings are
        decomposition vertices with no co-habiting stretches, handled by
        scan_retired_pairs via plain point ownership."""
        retired = dec.retired_exts(leaf)
        by_clip_a: dict[int, list] = {}
        for t in pieces_a:
            by_clip_a.setdefault(t.clip.cid, []).append(t)
        by_clip_b: dict[int, list] = {}
        for t in pieces_b:
            by_clip_b.setdefault(t.clip.cid, []).append(t)
        for pas in by_clip_a.values():
            ca = pas[0].clip
            for pbs in by_clip_b.values():
                cb = pbs[0].clip
                if same_group and ca.base.base_id == cb.base.base_id:
                    continue
                if ca.ext_key in retired and cb.ext_key in retired:
                    continue
                for (px, py) in pair_pts.of(ca, cb):
                    tpa = math.atan2(py - ca.base.center.y,
                                     px - ca.base.center.x)
                    tpb = math.atan2(py - cb.base.center.y,
                                     px - cb.base.center.x)
                    if not (any(t.holds_angle(tpa) for t in pas)
                            and any(t.holds_angle(tpb) for t in pbs)):
                        continue
                    _bump(out.types, bucket, 1)
                    out.total += 1
                    if DEBUG_POINTS is not None:
                        DEBUG_POINTS.append((ca.base.base_id, cb.base.base_id,
                                             px, py, bucket))

    def scan_retired_pairs(leaf):
        """Pairs of arcs that both bound cells of this subtree; their
        crossings are attributed by half-open point ownership, and typed by
        the clip labels (long-long pairs belong to the hierarchy pass)."""
        retired = dec.retired_exts(leaf)
        if not retired:
            return
        cands = dec.candidate_clips(leaf)
        ret1, ret2 = [], []
        n1 = len(clips1)
        same = clips2 is clips1
        for clip in cands:
            if clip.ext_key not in retired:
                continue
            if same or clip.cid < n1:
                ret1.append(clip)
            if same or clip.cid >= n1:
                ret2.append(clip)
        for ca in ret1:
            for cb in ret2:
                if same_group and ca.base.base_id == cb.base.base_id:
                    continue
                la = dec.is_long(ca, leaf)
                lb = dec.is_long(cb, leaf)
                if la and lb:
                    continue  # hierarchy pass
                bucket = "t2" if not (la or lb) else ("t3" if la else "t4")
                for (px, py) in pair_pts.of(ca, cb):
                    path = owner_path((px, py))
                    if not path or path[-1] is not leaf:
                        continue
                    _bump(out.types, bucket, 1)
                    out.total += 1
                    if DEBUG_POINTS is not None:
                        DEBUG_POINTS.append((ca.base.base_id, cb.base.base_id,
                                             px, py, bucket))

    leaves = dec.cutting.leaves
    t3_counts = Type3Counts()
    t4_counts = Type3Counts()
    for leaf in leaves:
        s1, s2 = dec.cell_sets(leaf, sep1, sep2)
        long1 = [t for t in s1 if t.kind == "long"]
        short1 = [t for t in s1 if t.kind == "short"]
        long2 = [t for t in s2 if t.kind == "long"]
        short2 = [t for t in s2 if t.kind == "short"]
        n_tau = len(s1) + (0 if s2 is s1 else len(s2))
        scan_retired_pairs(leaf)
        # type (2): short-short, always a scan
        scan_pairs_leaf(leaf, short1, short2, "t2")
        # types (3) and (4)
        for reds, blues, sep_r, red_box, tkey, tacc in (
                (long1, short2, sep1, box1, "t3", t3_counts),
                (long2, short1, sep2, box2, "t4", t4_counts)):
            if not reds or not blues:
                continue
            use_mach = (opts.type3_machinery
                        and len(reds) + len(blues) >= small)
            if use_mach:
                mach_reds = [t for t in reds if machinery_eligible(t, sep_r)]
                scan_reds = [t for t in reds if not machinery_eligible(t, sep_r)]
                mach_blues = [t for t in blues if not t.resident]
                scan_blues = [t for t in blues if t.resident]
            else:
                mach_reds, scan_reds = [], reds
                mach_blues, scan_blues = [], blues

            scan_pairs_leaf(leaf, scan_reds, blues, tkey)
            scan_pairs_leaf(leaf, mach_reds, scan_blues, tkey)
            if mach_reds and mach_blues:
                res = machinery_counts(mach_reds, mach_blues, red_box, sep_r,
                                       same_group, rng, n_tau,
                                       grouping=opts.grouping)
                tacc.add(res)
                pts = res.points()
                out.total += pts
                _bump(out.types, tkey, pts)
    for tkey, acc in (("t3", t3_counts), ("t4", t4_counts)):
        _bump(out.types, "t311", acc.t311)
        _bump(out.types, "t3121", acc.t3121)
        _bump(out.types, "t3122", acc.t3122)
        _bump(out.types, "t32", acc.t32)

    # type (1): long-long pairs over all hierarchy levels.  Each pair is
    # handled at the unique cells where both arcs are long but were not
    # both long in the parent; each crossing point is then counted at the
    # one such cell on its own locate path.
    for li, level in enumerate(dec.cutting.levels):
        for cell in level:
            parent = cell.parent
            retired = dec.retired_exts(cell)
            # clip sets come from the candidate lists: a retired arc can be
            # long here with all its stretches owned by sibling cells
            clips_all1: dict[int, ClippedArc] = {}
            clips_all2: dict[int, ClippedArc] = {}
            n1 = len(clips1)
            same_lists = clips2 is clips1
            for clip in dec.candidate_clips(cell):
                if not dec.is_long(clip, cell):
                    continue
                if same_lists or clip.cid < n1:
                    clips_all1[clip.cid] = clip
                if same_lists or clip.cid >= n1:
                    clips_all2[clip.cid] = clip
            if not clips_all1 or not clips_all2:
                continue
            s1, s2 = dec.cell_sets(cell, sep1, sep2)
            long1 = [t for t in s1 if t.kind == "long"]
            long2 = [t for t in s2 if t.kind == "long"]

            def ll(t):
                return parent is not None and dec.is_long(t.clip, parent)

            prop1 = [t for t in long1 if t.clip.ext_key not in retired]
            prop2 = [t for t in long2 if t.clip.ext_key not in retired]
            clips_res1 = {cid: c for cid, c in clips_all1.items()
                          if c.ext_key in retired}
            clips_res2 = {cid: c for cid, c in clips_all2.items()
                          if c.ext_key in retired}
            clips_prop1 = {cid: c for cid, c in clips_all1.items()
                          if c.ext_key not in retired}
            use_mach = (opts.type1_machinery
                        and not opts.instrument_type1
                        and len(prop1) + len(prop2) >= small)
            if use_mach:
                groups = (
                    ([t for t in prop1 if ll(t)], [t for t in prop2 if not ll(t)]),
                    ([t for t in prop1 if not ll(t)], [t for t in prop2 if ll(t)]),
                    ([t for t in prop1 if not ll(t)], [t for t in prop2 if not ll(t)]),
                )
                for X, Y in groups:
                    if not X or not Y:
                        continue
                    once = count_once_pairs(X, Y, same_group)
                    twice = count_twice_pairs_ll(X, Y, box2, box1,
                                                 same_group, rng)
                    pts = once + 2 * twice
                    out.total += pts
                    _bump(out.types, "t1", pts)
                    _bump(out.types, "t111", once)
                    _bump(out.types, "t112", twice)
                scan_sets = [(clips_res1, clips_all2),
                             (clips_prop1, clips_res2)]
            else:
                scan_sets = [(clips_all1, clips_all2)]
            pieces_by_cid: dict[int, list] = {}
            for t in long1:
                pieces_by_cid.setdefault(t.clip.cid, []).append(t)
            if s2 is not s1:
                for t in long2:
                    pieces_by_cid.setdefault(t.clip.cid, []).append(t)

            def holds(clip, px, py):
                th = math.atan2(py - clip.base.center.y,
                                px - clip.base.center.x)
                return any(t.holds_angle(th)
                           for t in pieces_by_cid.get(clip.cid, ()))

            for A, B in scan_sets:
                for ca in A.values():
                    for cb in B.values():
                        if same_group and ca.base.base_id == cb.base.base_id:
                            continue
                        if (parent is not None
                                and dec.is_long(ca, parent)
                                and dec.is_long(cb, parent)):
                            continue
                        both_ret = (ca.ext_key in retired
                                    and cb.ext_key in retired)
                        cnt = 0
                        for (px, py) in pair_pts.of(ca, cb):
                            if both_ret:
                                path = owner_path((px, py))
                                if not (len(path) > li and path[li] is cell):
                                    continue
                            elif not (holds(ca, px, py) and holds(cb, px, py)):
                                continue
                            cnt += 1
                            if DEBUG_POINTS is not None:
                                DEBUG_POINTS.append(
                                    (ca.base.base_id, cb.base.base_id,
                                     px, py, "t1"))
                            if opts.instrument_type1:
                                out.attributions.append(
                                    (li, cell.index,
                                     min(ca.base.base_id, cb.base.base_id),
                                     max(ca.base.base_id, cb.base.base_id),
                                     px, py))
                        if cnt:
                            out.total += cnt
                            _bump(out.types, "t1", cnt)
                            _bump(out.types, "t111" if cnt == 1 else "t112", 1)

    if same_group:
        # every unordered pair was seen in both color orders; the
        # long-short points land once in t3 and once (mirrored) in t4
        assert out.total % 2 == 0, "duplicated self-count must be even"
        out.total //= 2
        t34 = out.types.get("t3", 0) + out.types.get("t4", 0)
        assert t34 % 2 == 0
        out.types["t3"] = t34 // 2
        out.types["t4"] = 0
        for k in list(out.types):
            if k in ("t3", "t4"):
                continue
            assert out.types[k] % 2 == 0, (k, out.types)
            out.types[k] //= 2
    s = sum(out.types.get(k, 0) for k in ("t1", "t2", "t3", "t4"))
    assert s == out.total, (s, out.total, out.types)
    out.diag["cutting_cells"] = dec.cutting.cell_count()
    out.diag["resample_rounds"] = dec.cutting.stats.resample_rounds_total
    return out

# ---------------------------------------------------------------------------
# whole-instance counting


def _classify_coarse(a: UnitArc, b: UnitArc, box) -> str:
    """Type bucket for a scan-counted pair in a small cell: labels against
    the whole square cell (the r = 1 decomposition)."""
    x0, x1, y0, y1 = box

    def short(s: UnitArc) -> bool:
        if s.is_full_circle:
            return False
        for e in s.endpoints():
            if x0 < e.x < x1 and y0 < e.y < y1:
                return True
        return False

    sa, sb = short(a), short(b)
    if sa and sb:
        return "t2"
    if sa:
        return "t4"
    if sb:
        return "t3"
    return "t1"


def _scan_cell(cell_key, box, arcs: list[UnitArc], types: dict,
               color_pair: bool = False) -> int:
    """Exact per-cell count for small cells: all distinct-base pairs, points
    attributed to this cell by the grid owner rule."""
    total = 0
    n = len(arcs)
    for i in range(n):
        a = arcs[i]
        for j in range(i + 1, n):
            b = arcs[j]
            if a.base_id == b.base_id:
                continue
            if color_pair and a.color == b.color:
                continue
            for p in circle_circle_points(a.center, 1.0, b.center, 1.0):
                ta = math.atan2(p.y - a.center.y, p.x - a.center.x)
                tb = math.atan2(p.y - b.center.y, p.x - b.center.x)
                if not (a.contains_angle(ta) and b.contains_angle(tb)):
                    continue
                if cell_key_for_point(p.x, p.y) != cell_key:
                    continue
                total += 1
                _bump(types, _classify_coarse(a, b, box), 1)
    return total


def _cell_task(cell_key, box, arcs_here, by_center, opts: PipelineOptions,
               color_pair: bool):
    """Count intersections inside one cover cell."""
    types: dict = {}
    diag = {"machinery_cells": 0, "cutting_cells": 0, "resample_rounds": 0}
    attributions: list = []
    total = 0
    small = opts.resolve_small()
    if len(arcs_here) < 2:
        return 0, types, diag, attributions
    if len(arcs_here) < small:
        total = _scan_cell(cell_key, box, arcs_here, types, color_pair)
        return total, types, diag, attributions
    diag["machinery_cells"] = 1
    keys = sorted(by_center)
    clip_cache: dict = {}

    def clips_of(k, color=None):
        ck = (k, color)
        if ck not in clip_cache:
            group = by_center[k]
            if color is not None:
                group = [a for a in group if a.color == color]
            clip_cache[ck] = clip_arcs_to_cell(group, box)
        return clip_cache[ck]

    seed_seq = np.random.SeedSequence(
        [opts.seed, cell_key[0] & 0xFFFF, cell_key[1] & 0xFFFF])
    rng = np.random.default_rng(seed_seq)
    for i, k1 in enumerate(keys):
        for k2 in keys[i:]:
            same = (k1 == k2)
            box1 = _key_box(k1)
            box2 = _key_box(k2)
            sep1 = separation_of(k1, cell_key)
            sep2 = separation_of(k2, cell_key)
            if color_pair:
                combos = [(clips_of(k1, "red"), clips_of(k2, "blue"),
                           box1, box2, sep1, sep2)]
                if not same:
                    combos.append((clips_of(k2, "red"), clips_of(k1, "blue"),
                                   box2, box1, sep2, sep1))
                for (c1, c2, b1, b2, s1, s2) in combos:
                    if not c1 or not c2:
                        continue
                    res = count_cell_pair(cell_key, box, c1, c2, b1, b2,
                                          s1, s2, False, rng, opts)
                    total += res.total
                    for k, v in res.types.items():
                        _bump(types, k, v)
                    diag["cutting_cells"] += res.diag.get("cutting_cells", 0)
                    diag["resample_rounds"] += res.diag.get("resample_rounds", 0)
                    attributions.extend(res.attributions)
            else:
                c1 = clips_of(k1)
                c2 = c1 if same else clips_of(k2)
                if not c1 or not c2:
                    continue
                res = count_cell_pair(cell_key, box, c1, c2, box1, box2,
                                      sep1, sep2, same, rng, opts)
                total += res.total
                for k, v in res.types.items():
                    _bump(types, k, v)
                diag["cutting_cells"] += res.diag.get("cutting_cells", 0)
                diag["resample_rounds"] += res.diag.get("resample_rounds", 0)
                attributions.extend(res.attributions)
    return total, types, diag, attributions


def _key_box(key):
    from .grid import SIDE
    return (key[0] * SIDE, (key[0] + 1) * SIDE,
            key[1] * SIDE, (key[1] + 1) * SIDE)


def count_all(arcs: list[UnitArc],
              opts: PipelineOptions | None = None,
              color_pair: bool = False) -> CountReport:
    """Exact number of intersection points over all distinct-base arc pairs
    (with multiplicity 2 for twice-crossing pairs).  With ``color_pair``,
    only red-blue pairs are counted."""
    if opts is None:
        opts = PipelineOptions()
    t_start = time.perf_counter()
    report = CountReport()
    if opts.validate:
        require_general_position(arcs, opts.margin)
    if len(arcs) < 2:
        report.diagnostics["n"] = len(arcs)
        return report
    cover = build_grid_cover(arcs)
    cell_arcs: dict = defaultdict(list)
    for a in arcs:
        for c in cells_intersecting_arc(cover, a):
            cell_arcs[c.key].append(a)
    by_center_all: dict = defaultdict(dict)
    for key in cell_arcs:
        groups = defaultdict(list)
        for a in cell_arcs[key]:
            groups[cell_key_for_point(a.center.x, a.center.y)].append(a)
        by_center_all[key] = groups
    tasks = sorted(cell_arcs)

    def run(key):
        return _cell_task(key, _key_box(key), cell_arcs[key],
                          by_center_all[key], opts, color_pair)

    if opts.threads > 1:
        with ThreadPoolExecutor(max_workers=opts.threads) as ex:
            results = list(ex.map(run, tasks))
    else:
        results = [run(key) for key in tasks]
    attributions: list = []
    diag_sum = {"machinery_cells": 0, "cutting_cells": 0,
                "resample_rounds": 0}
    for total, types, diag, attr in results:
        report.total += total
        for k, v in types.items():
            _bump(report.by_type, k, v)
        for k in diag_sum:
            diag_sum[k] += diag.get(k, 0)
        attributions.extend(attr)
    report.diagnostics.update(diag_sum)
    report.diagnostics["n"] = len(arcs)
    report.diagnostics["cover_cells"] = len(cover.cells)
    report.diagnostics["occupied_cells"] = len(cover.occupied)
    report.diagnostics["seconds"] = time.perf_counter() - t_start
    if opts.instrument_type1:
        report.diagnostics["type1_attribution"] = attributions
    return report


# ---------------------------------------------------------------------------
# output-sensitive variant: guess the crossing count, cut globally, count
# inside the cutting cells, and double the guess when the work or the count
# exceeds it


def count_small_k(arcs: list[UnitArc], epsilon_knob: float = 0.1,
                  opts: PipelineOptions | None = None) -> CountReport:
    from .curves import circle_pieces
    from .cutting import box_cell, build_hierarchical_cutting

    if opts is None:
        opts = PipelineOptions()
    if opts.validate:
        require_general_position(arcs, opts.margin)
    report = CountReport()
    n = len(arcs)
    report.diagnostics["n"] = n
    if n < 2:
        report.diagnostics["k_guess_final"] = 0
        return report
    xs = [a.center.x for a in arcs]
    ys = [a.center.y for a in arcs]
    box = (min(xs) - 1.0, max(xs) + 1.0, min(ys) - 1.0, max(ys) + 1.0)
    items = []
    for a in arcs:
        items.extend(circle_pieces(a.center.x, a.center.y, 1.0,
                                   a.theta_start, a.theta_end, owner=a.id))
    arcs_by_id = {a.id: a for a in arcs}
    k_guess = 64
    rounds = 0
    while True:
        rounds += 1
        r = max(1.0, n * n / (n + k_guess))
        budget = 64.0 * (n + 4 * k_guess + 1) * max(1.0, n ** epsilon_knob)
        region = box_cell(*box, pad=1e-9)
        rng = np.random.default_rng(np.random.SeedSequence(
            [opts.seed, rounds, n & 0xFFFF]))
        cutting = build_hierarchical_cutting(items, r, region, rng=rng)
        work = 0
        total = 0
        overflow = False
        pair_set: set[tuple[int, int]] = set()
        for leaf in cutting.leaves:
            owners = sorted({c.owner for c in leaf.items}
                            | leaf.boundary_owner_ids())
            k = len(owners)
            work += k * (k - 1) // 2
            if work > budget:
                overflow = True
                break
            for i in range(k):
                for j in range(i + 1, k):
                    pair_set.add((owners[i], owners[j]))
        if not overflow:
            for (ia, ib) in pair_set:
                a = arcs_by_id[ia]
                b = arcs_by_id[ib]
                if a.base_id == b.base_id:
                    continue
                for p in circle_circle_points(a.center, 1.0, b.center, 1.0):
                    ta = math.atan2(p.y - a.center.y, p.x - a.center.x)
                    tb = math.atan2(p.y - b.center.y, p.x - b.center.x)
                    if a.contains_angle(ta) and b.contains_angle(tb):
                        total += 1
        if overflow or total > k_guess:
            k_guess *= 2
            continue
        report.total = total
        report.diagnostics["k_guess_final"] = k_guess
        report.diagnostics["doubling_rounds"] = rounds
        report.diagnostics["cutting_cells"] = cutting.cell_count()
        return report


# ---------------------------------------------------------------------------
# bichromatic counting


def count_bichromatic(arcs: list[UnitArc], mode: str = "direct",
                      opts: PipelineOptions | None = None) -> int:
    """Red-blue crossing points.  mode "direct" runs the pipeline on
    red-blue pairs only; mode "identity" uses K - K_red - K_blue."""
    if opts is None:
        opts = PipelineOptions()
    if mode == "identity":
        reds = [a for a in arcs if a.color == "red"]
        blues = [a for a in arcs if a.color == "blue"]
        k_all = count_all(arcs, opts).total
        k_r = count_all(reds, opts).total
        k_b = count_all(blues, opts).total
        return k_all - k_r - k_b
    if mode != "direct":
        raise ValueError(f"unknown bichromatic mode: {mode}")
    return count_all(arcs, opts, color_pair=True).total

"""Per-cell-pair decomposition: extending arcs, cutting, labels, pieces.

Wraps one counting subproblem (arcs of two center cells clipped to a square
cell C): builds the hierarchical cutting over the extending arcs and serves
per-cell candidate sets, long/short labels, and trimmed pieces for the type
counters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import config
from .cutting import (HierarchicalCutting, PseudoTrapezoid, box_cell,
                      build_hierarchical_cutting, locate_path)
from .errors import DegenerateInput
from .geom import TWO_PI, Point, UnitArc
from .trim import (ClippedArc, CoupledData, Separation, TrimmedArc,
                   attach_extending_components, circle_components_closed,
                   coupled_data_for, slice_arc_in_cell, strict_contains)

# The pair cutting's root is exactly the counting cell: clipped arcs end on
# its boundary and circle components must end there too.  Points exactly on
# the top/right edges (clip endpoints) are simply unlocatable, which the
# label pass treats as "not strictly inside" -- the correct reading.
CUT_PAD = 0.0


def cutting_r_for(n: int) -> int:
    """Refinement target for the per-cell-pair cutting."""
    if n <= 1:
        return 1
    return max(1, round(n ** (1.0 / 3.0) / (math.log2(n + 2) ** (2.0 / 3.0))))


class PairDecomposition:
    def __init__(self, box, clips1: list[ClippedArc], clips2: list[ClippedArc],
                 rng: np.random.Generator, r: float | None = None):
        self.box = box
        self.clips1 = clips1
        self.clips2 = clips2
        same = clips2 is clips1
        self.all_clips = clips1 if same else clips1 + clips2
        for i, clip in enumerate(self.all_clips):
            clip.cid = i
        n = len(self.all_clips)
        if r is None:
            r = cutting_r_for(n)
        ext_curves, ext_to_clips = attach_extending_components(
            self.all_clips, box)
        self.ext_to_clips = ext_to_clips
        items = [c for curves in ext_curves for c in curves]
        x0, x1, y0, y1 = box
        region = box_cell(x0, x1, y0, y1, pad=CUT_PAD)
        self.cutting = build_hierarchical_cutting(items, r, region, rng=rng)
        self._strict_cells: dict[int, frozenset[int]] = {}
        self._locate_endpoint_labels()
        self._retired_sets: dict[int, frozenset[int]] = {}
        self._collect_retired()
        self._piece_cache: dict[tuple[int, int], list[TrimmedArc]] = {}
        self._comp_cache: dict[tuple[int, int], list] = {}
        self._pid = 0

    def _collect_retired(self):
        """Extending arcs sampled into the cutting bound cells in their
        subtree; every piece of theirs is routed to the scan counters, so
        predicate machinery never faces crossings that sit exactly on cell
        boundaries."""
        for lv in self.cutting.levels:
            for cell in lv:
                if cell.parent is None:
                    self._retired_sets[id(cell)] = frozenset()
                    continue
                s = self._retired_sets.get(id(cell.parent), frozenset())
                sampled = self.cutting.retired.get(id(cell.parent))
                if sampled:
                    s = s | {c.owner for c in sampled}
                self._retired_sets[id(cell)] = s

    def retired_exts(self, cell: PseudoTrapezoid) -> frozenset[int]:
        return self._retired_sets.get(id(cell), frozenset())

    # -- labels ----------------------------------------------------------

    def _locate_endpoint_labels(self):
        for clip in self.all_clips:
            cells: set[int] = set()
            if not clip.base.is_full_circle:
                for e in clip.piece.endpoints():
                    try:
                        path = locate_path(self.cutting, e.x, e.y)
                    except Exception:
                        continue
                    for cell in path:
                        if strict_contains(cell, e.x, e.y):
                            cells.add(id(cell))
            self._strict_cells[clip.cid] = frozenset(cells)

    def is_long(self, clip: ClippedArc, cell: PseudoTrapezoid) -> bool:
        return id(cell) not in self._strict_cells[clip.cid]

    # -- candidates and pieces --------------------------------------------

    def candidate_clips(self, cell: PseudoTrapezoid) -> list[ClippedArc]:
        owners = {c.owner for c in cell.items}
        owners.update(cell.boundary_owner_ids())
        out = []
        for o in sorted(owners):
            if 0 <= o < len(self.ext_to_clips):
                out.extend(self.ext_to_clips[o])
        return out

    def components_of(self, clip: ClippedArc, cell: PseudoTrapezoid):
        key = (id(cell), clip.base.base_id)
        comps = self._comp_cache.get(key)
        if comps is None:
            comps = circle_components_closed(clip.base.center, cell)
            self._comp_cache[key] = comps
        return comps

    def pieces_of(self, clip: ClippedArc, cell: PseudoTrapezoid,
                  sep: Separation) -> list[TrimmedArc]:
        key = (id(cell), clip.cid)
        cached = self._piece_cache.get(key)
        if cached is not None:
            return cached
        spans = slice_arc_in_cell(clip.base.center, clip.piece.theta_start,
                                  clip.piece.theta_end, cell,
                                  with_offsets=True)
        kind = "long" if self.is_long(clip, cell) else "short"
        forced = clip.ext_key in self.retired_exts(cell)
        out = []
        for lo, hi, off_lo, off_hi, resident in spans:
            piece = clip.base.subarc(lo, hi, new_id=self._pid)
            self._pid += 1
            t = TrimmedArc(piece=piece, clip=clip, kind=kind,
                           resident=resident or forced,
                           off_lo=off_lo, off_hi=off_hi)
            if kind == "long" and not t.resident:
                self._classify_long(t, cell, sep)
            out.append(t)
        self._piece_cache[key] = out
        return out

    def _classify_long(self, t: TrimmedArc, cell: PseudoTrapezoid,
                       sep: Separation):
        comps = self.components_of(t.clip, cell)
        if len(comps) > 2:
            # outside the shapes the coupled-arc machinery handles
            t.shape = "other"
            return
        mid = 0.5 * (t.piece.theta_start + t.piece.theta_end)
        own = other = None
        for (lo, hi) in comps:
            d = math.fmod(mid - lo, TWO_PI)
            if d < 0.0:
                d += TWO_PI
            if d <= (hi - lo) + 1e-12 and own is None:
                own = (lo, hi)
            else:
                other = (lo, hi)
        if own is None:
            t.shape = "other"
            return
        lo, hi = own
        span_match = (abs((hi - lo) - t.piece.span) <= 1e-9)
        d0 = math.fmod(t.piece.theta_start - lo, TWO_PI)
        if d0 > math.pi:
            d0 -= TWO_PI
        if not (span_match and abs(d0) <= 1e-9):
            t.shape = "other"
            return
        if other is None:
            t.shape = "full"
        else:
            t.shape = "partial"
            t.coupled = coupled_data_for(t.piece, other[0], other[1], sep)

    def cell_sets(self, cell: PseudoTrapezoid, sep1: Separation,
                  sep2: Separation | None = None):
        """Trimmed pieces in the cell for both clip lists; each side's
        partial-arc bookkeeping uses its own separation frame."""
        if sep2 is None:
            sep2 = sep1
        cands = self.candidate_clips(cell)
        set1, set2 = [], []
        same = self.clips2 is self.clips1
        n1 = len(self.clips1)
        for clip in cands:
            if same or clip.cid < n1:
                set1.extend(self.pieces_of(clip, cell, sep1))
            else:
                set2.extend(self.pieces_of(clip, cell, sep2))
        if same:
            set2 = set1
        return set1, set2

    def locate(self, x: float, y: float):
        return locate_path(self.cutting, x, y)

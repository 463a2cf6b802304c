"""Hierarchical region-containment counting.

The recurring pattern in the pipeline: a family of regions (lunes, lune
complements, wedge-and-lune regions, radius-2 disks), each bounded by a few
curve pieces clipped to a square working box, is indexed by a hierarchical
cutting built over all the boundary pieces.  For each cell, the regions that
newly contain it (contain the cell but not its parent) are recorded; a query
point then descends its locate path, aggregating a per-cell payload over the
newly-containing regions, and at the leaf evaluates the surviving regions
(those whose boundary still crosses the leaf) directly.

Containment is decided without tolerances: a region contains a cell iff no
boundary piece of the region crosses the cell's interior and the cell's
reference point satisfies the region's membership predicate.  Queries are
assumed to stay clear of region boundaries by the ingest margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .curves import Curve, circle_pieces
from .cutting import (HierarchicalCutting, PseudoTrapezoid, box_cell,
                      build_hierarchical_cutting, locate_path)
from .geom import Point

BOX_PAD = 1e-7


def padded_box(box: tuple[float, float, float, float],
               pad: float = 2 * BOX_PAD) -> tuple[float, float, float, float]:
    """Clip domain for region curves: strictly wider than the cutting root,
    so no cell can extend past the witnessed part of a region boundary."""
    x0, x1, y0, y1 = box
    return (x0 - pad, x1 + pad, y0 - pad, y1 + pad)


@dataclass
class Region:
    rid: int
    owner: int
    curves: list[Curve]
    member: Callable[[float, float], bool]
    data: object = None
    base_id: int = -1


class RegionIndex:
    """Cutting over region boundary pieces with newly-contained lists."""

    def __init__(self, regions: list[Region], box: tuple[float, float, float, float],
                 r: float, rng: np.random.Generator,
                 payload_builder: Callable[[PseudoTrapezoid, list[Region]], object] | None = None,
                 cutting: HierarchicalCutting | None = None):
        self.regions = regions
        if cutting is None:
            items: list[Curve] = []
            for reg in regions:
                for c in reg.curves:
                    c.owner = reg.rid
                    items.append(c)
            x0, x1, y0, y1 = box
            root = box_cell(x0, x1, y0, y1, pad=BOX_PAD)
            r = max(1.0, min(float(r), float(max(len(items), 1))))
            cutting = build_hierarchical_cutting(items, r, root, rng=rng)
        self.cutting = cutting
        self.payload_builder = payload_builder
        self.newly: dict[int, list[Region]] = {}
        self.payload: dict[int, object] = {}
        self._by_base: dict[int, list[tuple[int, Region]]] = {}
        self._annotate()

    def _annotate(self):
        levels = self.cutting.levels
        root = levels[0][0]
        owner_sets: dict[int, set[int]] = {}

        def oset(cell: PseudoTrapezoid) -> set[int]:
            s = owner_sets.get(id(cell))
            if s is None:
                s = {c.owner for c in cell.items}
                owner_sets[id(cell)] = s
            return s

        rx, ry = root.ref_point()
        root_new = [reg for reg in self.regions
                    if reg.rid not in oset(root) and reg.member(rx, ry)]
        if root_new:
            self.newly[id(root)] = root_new
        for lv in levels[1:]:
            for cell in lv:
                parent = cell.parent
                pset = oset(parent)
                cset = oset(cell)
                cand = pset - cset
                if not cand:
                    continue
                cx, cy = cell.ref_point()
                new = [self.regions[rid] for rid in sorted(cand)
                       if self.regions[rid].member(cx, cy)]
                if new:
                    self.newly[id(cell)] = new
        for key, regs in self.newly.items():
            for reg in regs:
                if reg.base_id >= 0:
                    self._by_base.setdefault(reg.base_id, []).append((key, reg))
        if self.payload_builder is not None:
            for lv in levels:
                for cell in lv:
                    regs = self.newly.get(id(cell))
                    if regs:
                        self.payload[id(cell)] = self.payload_builder(cell, regs)

    def query(self, x: float, y: float,
              fold_cell: Callable[[PseudoTrapezoid, object], int],
              eval_region: Callable[[Region], int],
              exclude_base: int | None = None,
              excluded_value: Callable[[PseudoTrapezoid, Region], int] | None = None) -> int:
        """Descend the locate path; sum fold_cell over per-cell payloads (or
        newly lists when no payload builder is set) and eval_region over the
        distinct regions whose curves cross the leaf.

        ``exclude_base``: regions with this base_id are excluded; bulk
        contributions they made are backed out via ``excluded_value``."""
        path = locate_path(self.cutting, x, y)
        total = 0
        cell_by_key = None
        for cell in path:
            key = id(cell)
            if key in self.newly:
                payload = (self.payload.get(key) if self.payload_builder
                           else self.newly[key])
                total += fold_cell(cell, payload)
        if exclude_base is not None and exclude_base in self._by_base:
            if cell_by_key is None:
                cell_by_key = {id(c): c for c in path}
            for key, reg in self._by_base[exclude_base]:
                if key in cell_by_key:
                    total -= excluded_value(cell_by_key[key], reg)
        leaf = path[-1]
        seen: set[int] = set()
        for c in leaf.items:
            if c.owner in seen:
                continue
            seen.add(c.owner)
            reg = self.regions[c.owner]
            if exclude_base is not None and reg.base_id == exclude_base:
                continue
            total += eval_region(reg)
        return total

    def count_containing(self, x: float, y: float) -> int:
        """Number of regions containing (x, y); leaf survivors are decided
        by the membership predicate."""
        return self.query(
            x, y,
            fold_cell=lambda cell, regs: len(regs),
            eval_region=lambda reg: 1 if reg.member(x, y) else 0)


# ---------------------------------------------------------------------------
# region constructors


def clip_circle_to_box(cx: float, cy: float, r: float,
                       box: tuple[float, float, float, float],
                       owner: int = -1) -> list[Curve]:
    """X-monotone pieces of the full circle restricted to the closed box.
    Returns [] when the circle misses the box entirely."""
    x0, x1, y0, y1 = box
    pieces = circle_pieces(cx, cy, r, 0.0, 2.0 * math.pi, owner=owner)
    out = []
    for p in pieces:
        lo = max(p.x_lo, x0)
        hi = min(p.x_hi, x1)
        if not (lo < hi):
            continue
        # cut where the branch crosses the horizontal box edges
        cuts = [lo, hi]
        for ye in (y0, y1):
            dy = ye - cy
            if abs(dy) < r:
                w = math.sqrt(r * r - dy * dy)
                sign_ok = (dy >= 0) == (p.branch == 1)
                if sign_ok:
                    for xc in (cx - w, cx + w):
                        if lo < xc < hi:
                            cuts.append(xc)
        cuts = sorted(set(cuts))
        for i in range(len(cuts) - 1):
            a, b = cuts[i], cuts[i + 1]
            xm = 0.5 * (a + b)
            ym = p.y_at(xm)
            if y0 <= ym <= y1:
                out.append(Curve("arc", a, b, owner=owner, cx=cx, cy=cy,
                                 r=r, branch=p.branch))
    return out


def disk_region(rid: int, owner: int, center: Point, radius: float,
                box: tuple[float, float, float, float]) -> Region:
    curves = clip_circle_to_box(center.x, center.y, radius, padded_box(box),
                                owner=rid)
    r2 = radius * radius

    def member(x: float, y: float, cx=center.x, cy=center.y, rr=r2) -> bool:
        dx, dy = x - cx, y - cy
        return dx * dx + dy * dy < rr

    return Region(rid, owner, curves, member, data=center)


def disk_count_via_cutting(points: list[Point], disks: list[Point],
                           radius: float = 2.0) -> int:
    """Point-in-disk incidence count through the region machinery."""
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    box = (min(xs), max(xs), min(ys), max(ys))
    regions = [disk_region(i, i, c, radius, box) for i, c in enumerate(disks)]
    m = len(regions)
    r = max(1.0, m / max(math.log2(m + 2), 1.0))
    idx = RegionIndex(regions, box, r, np.random.default_rng(12345))
    return sum(idx.count_containing(p.x, p.y) for p in points)

"""Hierarchical (1/r)-cuttings over x-monotone curve pieces.

Cells are pseudo-trapezoids: vertical left/right walls, x-monotone top and
bottom pieces.  Each level halves the per-cell crossing bound (rho = 2); a
level is built per parent cell by sampling a few of the parent's crossing
items, forming their trapezoidal decomposition clipped to the parent, and
verifying the bound, resampling on failure.

Cell membership is half-open and tolerance-free: x in [left, right), y in
[bottom(x), top(x)).  Sibling cells share wall floats and boundary Curve
objects, so the tests are complementary by construction and every point has
exactly one owner cell per level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curves import UPPER, Curve, curve_intersections, seg
from .errors import BuildFailure, OnBoundary

RHO = 2


@dataclass
class PseudoTrapezoid:
    left_x: float
    right_x: float
    bottom: Curve | None
    top: Curve | None
    level: int
    index: int = -1
    parent: "PseudoTrapezoid | None" = None
    children: list = field(default_factory=list)
    items: list[Curve] = field(default_factory=list)
    # uids/owners of curves incident to the walls (event generators)
    wall_owners_left: frozenset = frozenset()
    wall_owners_right: frozenset = frozenset()

    def contains(self, x: float, y: float) -> bool:
        if not (self.left_x <= x < self.right_x):
            return False
        if self.bottom is not None and not (y >= self.bottom.y_at(x)):
            return False
        if self.top is not None and not (y < self.top.y_at(x)):
            return False
        return True

    def boundary_clearance(self, x: float, y: float) -> float:
        d = min(x - self.left_x, self.right_x - x)
        if self.bottom is not None:
            d = min(d, abs(y - self.bottom.y_at(x)))
        if self.top is not None:
            d = min(d, abs(y - self.top.y_at(x)))
        return d

    def containment_violation(self, x: float, y: float) -> float:
        """How far outside the closed cell the point sits (0 inside)."""
        v = max(0.0, self.left_x - x) + max(0.0, x - self.right_x)
        if self.bottom is not None:
            v += max(0.0, self.bottom.y_at(x) - y)
        if self.top is not None:
            v += max(0.0, y - self.top.y_at(x))
        return v

    @property
    def x_mid(self) -> float:
        return 0.5 * (self.left_x + self.right_x)

    def ref_point(self) -> tuple[float, float]:
        x = self.x_mid
        yb = self.bottom.y_at(x) if self.bottom is not None else -1e18
        yt = self.top.y_at(x) if self.top is not None else 1e18
        return (x, 0.5 * (yb + yt))

    def boundary_owner_ids(self) -> set[int]:
        out = set()
        if self.bottom is not None and self.bottom.owner >= 0:
            out.add(self.bottom.owner)
        if self.top is not None and self.top.owner >= 0:
            out.add(self.top.owner)
        out.update(o for o in self.wall_owners_left if o >= 0)
        out.update(o for o in self.wall_owners_right if o >= 0)
        return out


def box_cell(x0: float, x1: float, y0: float, y1: float,
             pad: float = 0.0) -> PseudoTrapezoid:
    x0 -= pad
    x1 += pad
    y0 -= pad
    y1 += pad
    bottom = seg(x0, y0, x1, y0, owner=-1)
    top = seg(x0, y1, x1, y1, owner=-1)
    return PseudoTrapezoid(x0, x1, bottom, top, level=0)


# ---------------------------------------------------------------------------
# crossing test


def _side_crossing_xs(curve: Curve, side: Curve,
                      cache: dict | None) -> list[float]:
    if (curve.kind == "arc" and side.kind == "arc"
            and curve.circle_key == side.circle_key):
        return ()
    if cache is None:
        return [px for (px, _py) in curve_intersections(curve, side)]
    key = (curve.uid, side.uid)
    xs = cache.get(key)
    if xs is None:
        xs = [px for (px, _py) in curve_intersections(curve, side)]
        cache[key] = xs
    return xs


def crosses_cell(curve: Curve, cell: PseudoTrapezoid,
                 cache: dict | None = None) -> bool:
    """True iff the piece meets the open interior of the cell."""
    if curve.is_vertical:
        x = curve.x_lo
        if not (cell.left_x < x < cell.right_x):
            return False
        ylo, yhi = min(curve.y_lo, curve.y_hi), max(curve.y_lo, curve.y_hi)
        yb = cell.bottom.y_at(x) if cell.bottom is not None else -math.inf
        yt = cell.top.y_at(x) if cell.top is not None else math.inf
        return yhi > yb and ylo < yt
    xa = max(curve.x_lo, cell.left_x)
    xb = min(curve.x_hi, cell.right_x)
    if not (xa < xb):
        return False
    cuts = [xa, xb]
    for side in (cell.bottom, cell.top):
        if side is None:
            continue
        for px in _side_crossing_xs(curve, side, cache):
            if xa < px < xb:
                cuts.append(px)
    cuts.sort()
    for i in range(len(cuts) - 1):
        xm = 0.5 * (cuts[i] + cuts[i + 1])
        if not (curve.x_lo <= xm <= curve.x_hi):
            continue
        y = curve.y_at(xm)
        if cell.bottom is not None and not (y > cell.bottom.y_at(xm)):
            continue
        if cell.top is not None and not (y < cell.top.y_at(xm)):
            continue
        return True
    return False


def clip_curve_to_cell(curve: Curve, cell: PseudoTrapezoid) -> list[Curve]:
    """Maximal sub-pieces of the curve inside the cell (interior sense)."""
    if curve.is_vertical:
        return []
    xa = max(curve.x_lo, cell.left_x)
    xb = min(curve.x_hi, cell.right_x)
    if not (xa < xb):
        return []
    cuts = [xa, xb]
    for side in (cell.bottom, cell.top):
        if side is None:
            continue
        if (curve.kind == "arc" and side.kind == "arc"
                and curve.circle_key == side.circle_key):
            continue
        for (px, _py) in curve_intersections(curve, side):
            if xa < px < xb:
                cuts.append(px)
    cuts = sorted(set(cuts))
    spans = []
    for i in range(len(cuts) - 1):
        lo, hi = cuts[i], cuts[i + 1]
        xm = 0.5 * (lo + hi)
        y = curve.y_at(xm)
        ok = True
        if cell.bottom is not None and not (y > cell.bottom.y_at(xm)):
            ok = False
        if ok and cell.top is not None and not (y < cell.top.y_at(xm)):
            ok = False
        if ok:
            if spans and spans[-1][1] == lo:
                spans[-1][1] = hi
            else:
                spans.append([lo, hi])
    out = []
    for lo, hi in spans:
        if curve.kind == "seg":
            out.append(seg(lo, curve.y_at(lo), hi, curve.y_at(hi),
                           owner=curve.owner))
        else:
            piece = Curve("arc", lo, hi, owner=curve.owner, cx=curve.cx,
                          cy=curve.cy, r=curve.r, branch=curve.branch)
            out.append(piece)
    return out


# ---------------------------------------------------------------------------
# trapezoidal decomposition of a sample inside a parent cell


def vertical_decomposition(parent: PseudoTrapezoid,
                           sample: list[Curve]) -> list[PseudoTrapezoid]:
    pieces: list[Curve] = []
    for c in sample:
        pieces.extend(clip_curve_to_cell(c, parent))
    events: dict[float, set[int]] = {
        parent.left_x: set(parent.wall_owners_left),
        parent.right_x: set(parent.wall_owners_right),
    }

    def add_event(x: float, owners):
        if parent.left_x < x < parent.right_x:
            events.setdefault(x, set()).update(owners)

    verticals = [p for p in pieces if p.is_vertical]
    pieces = [p for p in pieces if not p.is_vertical]
    for p in verticals:
        add_event(p.x_lo, (p.owner,))
    for p in pieces:
        add_event(p.x_lo, (p.owner,))
        add_event(p.x_hi, (p.owner,))
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            for (px, _py) in curve_intersections(pieces[i], pieces[j]):
                add_event(px, (pieces[i].owner, pieces[j].owner))

    xs = sorted(x for x in events if parent.left_x <= x <= parent.right_x)
    if xs[0] != parent.left_x:
        xs.insert(0, parent.left_x)
    if xs[-1] != parent.right_x:
        xs.append(parent.right_x)

    # stacks per slab, then merge runs with identical (bottom, top)
    cells: list[PseudoTrapezoid] = []
    open_run: dict[tuple[int, int], PseudoTrapezoid] = {}
    for si in range(len(xs) - 1):
        xa, xb = xs[si], xs[si + 1]
        if not (xa < xb):
            continue
        xm = 0.5 * (xa + xb)
        active = [p for p in pieces if p.x_lo <= xm <= p.x_hi]
        active.sort(key=lambda p: p.y_at(xm))
        stack = [parent.bottom] + active + [parent.top]
        new_run: dict[tuple[int, int], PseudoTrapezoid] = {}
        for bi in range(len(stack) - 1):
            bot, top = stack[bi], stack[bi + 1]
            key = (bot.uid if bot is not None else 0,
                   top.uid if top is not None else 0)
            prev = open_run.get(key)
            if prev is not None and prev.right_x == xa:
                prev.right_x = xb
                new_run[key] = prev
            else:
                cell = PseudoTrapezoid(xa, xb, bot, top,
                                       level=parent.level + 1, parent=parent)
                cells.append(cell)
                new_run[key] = cell
        open_run = new_run
    for cell in cells:
        cell.wall_owners_left = frozenset(events.get(cell.left_x, ()))
        cell.wall_owners_right = frozenset(events.get(cell.right_x, ()))
    return cells


def _side_y_at_vec(side: Curve | None, xs, default: float):
    if side is None:
        return np.full_like(xs, default)
    if side.kind == "seg":
        if side.x_hi == side.x_lo:
            return np.full_like(xs, min(side.y_lo, side.y_hi))
        t = (np.clip(xs, side.x_lo, side.x_hi) - side.x_lo) / (side.x_hi - side.x_lo)
        return side.y_lo + t * (side.y_hi - side.y_lo)
    dx = np.clip(xs - side.cx, -side.r, side.r)
    h = np.sqrt(np.maximum(side.r * side.r - dx * dx, 0.0))
    return side.cy + (h if side.branch == UPPER else -h)


def _curve_y_at_vec(kind_arc_mask, cx, cy, r, branch, y0, y1, xl, xh, xs):
    """Vectorized Curve.y_at over per-item parameter arrays."""
    out = np.empty_like(xs)
    m = kind_arc_mask
    if m.any():
        dx = np.clip(xs[m] - cx[m], -r[m], r[m])
        h = np.sqrt(np.maximum(r[m] * r[m] - dx * dx, 0.0))
        out[m] = cy[m] + branch[m] * h
    sm = ~m
    if sm.any():
        w = xh[sm] - xl[sm]
        t = np.zeros_like(xs[sm])
        ok = w > 0
        t[ok] = (np.clip(xs[sm][ok], xl[sm][ok], xh[sm][ok]) - xl[sm][ok]) / w[ok]
        out[sm] = y0[sm] + t * (y1[sm] - y0[sm])
    return out


def _cross_xs_with_side_vec(side: Curve, kind_arc, cx, cy, r, sx0, sy0, sx1, sy1):
    """Two crossing-x slots per item against one side curve (NaN = none)."""
    n = len(kind_arc)
    xs1 = np.full(n, np.nan)
    xs2 = np.full(n, np.nan)
    am = kind_arc
    if am.any():
        if side.kind == "arc":
            dx = side.cx - cx[am]
            dy = side.cy - cy[am]
            d2 = dx * dx + dy * dy
            d = np.sqrt(np.where(d2 > 0, d2, 1.0))
            with np.errstate(invalid="ignore", divide="ignore"):
                a = (d2 + r[am] * r[am] - side.r * side.r) / (2.0 * d)
                h2 = r[am] * r[am] - a * a
            ok = (d2 > 0) & (d < r[am] + side.r) & (d > np.abs(r[am] - side.r)) & (h2 > 0)
            h = np.sqrt(np.where(ok, h2, 0.0))
            ux, uy = dx / d, dy / d
            mx = cx[am] + a * ux
            px1 = np.where(ok, mx - h * uy, np.nan)
            px2 = np.where(ok, mx + h * uy, np.nan)
            # same-circle pieces never cross their own circle
            same = (cx[am] == side.cx) & (cy[am] == side.cy) & (r[am] == side.r)
            px1 = np.where(same, np.nan, px1)
            px2 = np.where(same, np.nan, px2)
            xs1[am] = px1
            xs2[am] = px2
        else:
            ddx = side.x_hi - side.x_lo
            ddy = side.y_hi - side.y_lo
            fx = side.x_lo - cx[am]
            fy = side.y_lo - cy[am]
            aa = ddx * ddx + ddy * ddy
            if aa > 0:
                bb = 2.0 * (fx * ddx + fy * ddy)
                cc = fx * fx + fy * fy - r[am] * r[am]
                disc = bb * bb - 4.0 * aa * cc
                ok = disc > 0
                sq = np.sqrt(np.where(ok, disc, 0.0))
                t1 = (-bb - sq) / (2.0 * aa)
                t2 = (-bb + sq) / (2.0 * aa)
                v1 = ok & (t1 >= 0.0) & (t1 <= 1.0)
                v2 = ok & (t2 >= 0.0) & (t2 <= 1.0)
                xs1[am] = np.where(v1, side.x_lo + t1 * ddx, np.nan)
                xs2[am] = np.where(v2, side.x_lo + t2 * ddx, np.nan)
    sm = ~kind_arc
    if sm.any():
        # segment item vs side: at most one crossing for seg/seg; for an
        # arc side solve on the item's line
        if side.kind == "seg":
            rx = sx1[sm] - sx0[sm]
            ry = sy1[sm] - sy0[sm]
            sxd = side.x_hi - side.x_lo
            syd = side.y_hi - side.y_lo
            den = rx * syd - ry * sxd
            with np.errstate(invalid="ignore", divide="ignore"):
                t = ((side.x_lo - sx0[sm]) * syd - (side.y_lo - sy0[sm]) * sxd) / den
                u = ((side.x_lo - sx0[sm]) * ry - (side.y_lo - sy0[sm]) * rx) / den
            ok = (den != 0) & (t >= 0) & (t <= 1) & (u >= 0) & (u <= 1)
            xs1[sm] = np.where(ok, sx0[sm] + t * rx, np.nan)
        else:
            fx = sx0[sm] - side.cx
            fy = sy0[sm] - side.cy
            rx = sx1[sm] - sx0[sm]
            ry = sy1[sm] - sy0[sm]
            aa = rx * rx + ry * ry
            bb = 2.0 * (fx * rx + fy * ry)
            cc = fx * fx + fy * fy - side.r * side.r
            with np.errstate(invalid="ignore", divide="ignore"):
                disc = bb * bb - 4.0 * aa * cc
                ok = (aa > 0) & (disc > 0)
                sq = np.sqrt(np.where(ok, disc, 0.0))
                t1 = np.where(ok, (-bb - sq) / (2.0 * aa), np.nan)
                t2 = np.where(ok, (-bb + sq) / (2.0 * aa), np.nan)
            v1 = ok & (t1 >= 0) & (t1 <= 1)
            v2 = ok & (t2 >= 0) & (t2 <= 1)
            py1 = sy0[sm] + t1 * ry
            py2 = sy0[sm] + t2 * ry
            xs1[sm] = np.where(v1 & ((py1 >= side.cy) == (side.branch == UPPER)),
                               sx0[sm] + t1 * rx, np.nan)
            xs2[sm] = np.where(v2 & ((py2 >= side.cy) == (side.branch == UPPER)),
                               sx0[sm] + t2 * rx, np.nan)
    return xs1, xs2


def _assign_items(children: list[PseudoTrapezoid], rest: list[Curve],
                  bound: float) -> bool:
    """Fill children's crossing lists from ``rest``; False as soon as any
    child exceeds the bound."""
    if len(rest) < 48:
        return _assign_items_scalar(children, rest, bound)
    verts = [c for c in rest if c.is_vertical]
    flat = [c for c in rest if not c.is_vertical]
    n = len(flat)
    kind_arc = np.array([c.kind == "arc" for c in flat])
    cx = np.array([c.cx for c in flat])
    cy = np.array([c.cy for c in flat])
    r = np.array([c.r for c in flat])
    branch = np.array([float(c.branch) for c in flat])
    xl = np.array([c.x_lo for c in flat])
    xh = np.array([c.x_hi for c in flat])
    sy0 = np.array([c.y_lo for c in flat])
    sy1 = np.array([c.y_hi for c in flat])
    yr = np.array([c.y_range() for c in flat])
    ylo, yhi = yr[:, 0], yr[:, 1]
    sx0 = xl.copy()
    sx1 = xh.copy()
    for child in children:
        child.items = []
    ok_total = True
    for child in children:
        yb_min = child.bottom.y_range()[0] if child.bottom is not None else -math.inf
        yt_max = child.top.y_range()[1] if child.top is not None else math.inf
        cand = np.nonzero((xl < child.right_x) & (xh > child.left_x)
                          & (ylo < yt_max) & (yhi > yb_min))[0]
        if len(cand) == 0:
            continue
        ka = kind_arc[cand]
        x0 = np.maximum(xl[cand], child.left_x)
        x1 = np.minimum(xh[cand], child.right_x)
        cuts = [x0, x1]
        for side in (child.bottom, child.top):
            if side is None:
                continue
            a1, a2 = _cross_xs_with_side_vec(side, ka, cx[cand], cy[cand],
                                             r[cand], sx0[cand], sy0[cand],
                                             sx1[cand], sy1[cand])
            for arrx in (a1, a2):
                inside = (arrx > x0) & (arrx < x1)
                cuts.append(np.where(inside, arrx, x0))
        cm = np.sort(np.stack(cuts, axis=1), axis=1)
        mids = 0.5 * (cm[:, :-1] + cm[:, 1:])
        widths = cm[:, 1:] - cm[:, :-1]
        crossing = np.zeros(len(cand), dtype=bool)
        for k in range(mids.shape[1]):
            mx = mids[:, k]
            valid = (widths[:, k] > 0) & ~crossing
            if not valid.any():
                continue
            y_it = _curve_y_at_vec(ka, cx[cand], cy[cand], r[cand], branch[cand],
                                   sy0[cand], sy1[cand], xl[cand], xh[cand], mx)
            yb = _side_y_at_vec(child.bottom, mx, -math.inf)
            yt = _side_y_at_vec(child.top, mx, math.inf)
            crossing |= valid & (y_it > yb) & (y_it < yt)
        hit = cand[crossing]
        child.items.extend(flat[i] for i in hit)
        if len(child.items) > bound:
            return False
    for c in verts:
        for child in children:
            if crosses_cell(c, child):
                child.items.append(c)
                if len(child.items) > bound:
                    return False
    return ok_total


def _assign_items_scalar(children: list[PseudoTrapezoid], rest: list[Curve],
                         bound: float) -> bool:
    boxes = []
    for child in children:
        child.items = []
        yb = child.bottom.y_range()[0] if child.bottom is not None else -math.inf
        yt = child.top.y_range()[1] if child.top is not None else math.inf
        boxes.append((child.left_x, child.right_x, yb, yt))
    order = sorted(range(len(children)), key=lambda i: boxes[i][0])
    lefts = [boxes[i][0] for i in order]
    import bisect as _bisect
    cache: dict = {}
    for c in rest:
        ylo, yhi = c.y_range()
        hi_idx = _bisect.bisect_right(lefts, c.x_hi)
        for oi in range(hi_idx):
            i = order[oi]
            L, R, yb, yt = boxes[i]
            if R <= c.x_lo or yhi <= yb or ylo >= yt:
                continue
            child = children[i]
            if crosses_cell(c, child, cache):
                child.items.append(c)
                if len(child.items) > bound:
                    return False
    return True


# ---------------------------------------------------------------------------
# hierarchical build


@dataclass
class BuildStats:
    levels: int = 0
    cells_per_level: list = field(default_factory=list)
    resample_rounds_total: int = 0
    resample_rounds_max: int = 0
    c_child: int = 0
    c_size: float = 0.0
    c_total: float = 0.0
    crossing_total: int = 0


@dataclass
class HierarchicalCutting:
    levels: list[list[PseudoTrapezoid]]
    rho: int
    r: float
    n_items: int
    stats: BuildStats
    # (parent, retired curve pieces) per refinement, for boundary-pair sweeps
    retired: dict[int, list[Curve]] = field(default_factory=dict)

    @property
    def leaves(self) -> list[PseudoTrapezoid]:
        return self.levels[-1]

    def cell_count(self) -> int:
        return sum(len(lv) for lv in self.levels)


def build_hierarchical_cutting(items: list[Curve], r: float,
                               region: PseudoTrapezoid,
                               rng: np.random.Generator | None = None,
                               max_rounds: int = 64,
                               sample_size: int = 8) -> HierarchicalCutting:
    """Build the leveled cutting; every level-i cell is crossed by at most
    n/2^i items (verified, resampled on failure)."""
    if rng is None:
        rng = np.random.default_rng(0)
    n = len(items)
    r = max(1.0, min(float(r), float(max(n, 1))))
    k = int(math.ceil(math.log2(r))) if r > 1.0 else 0
    root = region
    root.level = 0
    root.index = 0
    root.items = [c for c in items if crosses_cell(c, root)]
    levels = [[root]]
    stats = BuildStats()
    retired: dict[int, list[Curve]] = {}
    for i in range(1, k + 1):
        bound = n / (RHO ** i)
        level_cells: list[PseudoTrapezoid] = []
        for parent in levels[i - 1]:
            if len(parent.items) <= bound:
                child = PseudoTrapezoid(
                    parent.left_x, parent.right_x, parent.bottom, parent.top,
                    level=i, parent=parent, items=parent.items,
                    wall_owners_left=parent.wall_owners_left,
                    wall_owners_right=parent.wall_owners_right)
                parent.children = [child]
                level_cells.append(child)
                continue
            ok = False
            for attempt in range(max_rounds):
                size = min(len(parent.items), sample_size + 4 * (attempt // 8))
                idx = rng.choice(len(parent.items), size=size, replace=False)
                sample = [parent.items[j] for j in sorted(idx)]
                sample_uids = {c.uid for c in sample}
                children = vertical_decomposition(parent, sample)
                rest = [c for c in parent.items if c.uid not in sample_uids]
                good = _assign_items(children, rest, bound)
                stats.resample_rounds_total += 1
                if good:
                    stats.resample_rounds_max = max(stats.resample_rounds_max,
                                                    attempt + 1)
                    parent.children = children
                    level_cells.extend(children)
                    retired.setdefault(id(parent), []).extend(sample)
                    ok = True
                    break
            if not ok:
                raise BuildFailure(
                    f"level {i}: cell crossing bound {bound:.1f} unreachable "
                    f"after {max_rounds} rounds (|items|={len(parent.items)})")
        for j, c in enumerate(level_cells):
            c.index = j
        levels.append(level_cells)
    stats.levels = len(levels)
    stats.cells_per_level = [len(lv) for lv in levels]
    stats.c_child = max((len(p.children) for lv in levels[:-1] for p in lv),
                        default=0)
    stats.c_size = max(len(lv) / (RHO ** (2 * i))
                       for i, lv in enumerate(levels))
    stats.crossing_total = sum(len(c.items) for lv in levels for c in lv)
    stats.c_total = stats.crossing_total / max(n * r, 1.0)
    return HierarchicalCutting(levels=levels, rho=RHO, r=r, n_items=n,
                               stats=stats, retired=retired)


def locate_path(cutting: HierarchicalCutting, x: float, y: float,
                strict_eps: float | None = None,
                lenient: bool = False) -> list[PseudoTrapezoid]:
    """Root-to-leaf cells containing (x, y), one per level, by child descent.

    Descent takes the first child whose half-open test passes, which makes
    the owner unique even where float noise lets two siblings' closures
    overlap by an ulp.  With ``lenient``, a point falling into such a crack
    (no child passes) descends into the nearest child instead of raising.
    With ``strict_eps`` set, raises OnBoundary when the point comes within
    that distance of any boundary along the path."""
    root = cutting.levels[0][0]
    if not root.contains(x, y):
        raise OnBoundary(f"point ({x}, {y}) outside the cutting region")
    path = [root]
    cur = root
    while cur.children:
        nxt = None
        for child in cur.children:
            if child.contains(x, y):
                nxt = child
                break
        if nxt is None:
            if lenient:
                nxt = min(cur.children,
                          key=lambda c: (c.containment_violation(x, y), c.index))
            else:
                raise OnBoundary(
                    f"point ({x}, {y}) fell between children at level {cur.level}")
        if strict_eps is not None and nxt.boundary_clearance(x, y) <= strict_eps:
            raise OnBoundary(
                f"point ({x}, {y}) within {strict_eps} of a cell boundary")
        path.append(nxt)
        cur = nxt
    return path


def _curve_desc(c: Curve | None) -> str:
    if c is None:
        return "inf"
    if c.kind == "seg":
        return (f"seg({c.x_lo:.9g},{c.y_lo:.9g},{c.x_hi:.9g},{c.y_hi:.9g})")
    b = "U" if c.branch == 1 else "L"
    return (f"circ({c.cx:.9g},{c.cy:.9g},{c.r:.9g},"
            f"{c.x_lo:.9g},{c.x_hi:.9g},{b})")


def dump(cutting: HierarchicalCutting) -> str:
    """One line per cell: level ix parent left_x right_x top bottom |H|."""
    lines = []
    for li, lv in enumerate(cutting.levels):
        for cell in lv:
            parent_ix = cell.parent.index if cell.parent is not None else -1
            lines.append(
                f"{li} {cell.index} {parent_ix} {cell.left_x:.9g} "
                f"{cell.right_x:.9g} {_curve_desc(cell.top)} "
                f"{_curve_desc(cell.bottom)} {len(cell.items)}")
    return "\n".join(lines) + "\n"

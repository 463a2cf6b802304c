"""Clipping arcs to square cells and trimming them inside cutting cells.

Terminology for a counting cell C and a pseudo-trapezoid tau inside it:

* clipped arc: maximal sub-arc of an input arc inside C (at most two).
* extending arc: the component of the arc's circle inside C containing the
  clipped arc; the cutting over a cell-pair subproblem is built on these.
* trimmed piece: maximal sub-arc of a clipped arc inside tau.  A piece is
  ``short`` when the clipped arc has an endpoint strictly inside tau, else
  ``long``.  A long piece is ``full`` when its circle meets tau in a single
  component (the piece itself), ``partial`` when in two (the other is the
  coupled component).  Pieces that fail these shapes (possible only for
  boundary-resident arcs retired into the cutting) are routed to scans.

Ownership discipline: cell membership is half-open, and a piece running
exactly along a cell's boundary curve (same underlying circle) belongs to
the cell having that curve as its *bottom* side.  This partitions every arc
among the leaves with no tolerance decisions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .curves import Curve, circle_pieces, circle_curve_crossing_angles
from .cutting import PseudoTrapezoid
from .errors import DegenerateInput
from .geom import TWO_PI, Point, UnitArc, norm_angle

MERGE_TOL = 1e-12


# ---------------------------------------------------------------------------
# angular slicing of a circle against boxes and cells


def _circle_box_cut_angles(cx: float, cy: float, box) -> list[float]:
    x0, x1, y0, y1 = box
    out = []
    for x in (x0, x1):
        dx = x - cx
        if abs(dx) < 1.0:
            h = math.sqrt(1.0 - dx * dx)
            out.extend((math.atan2(h, dx), math.atan2(-h, dx)))
    for y in (y0, y1):
        dy = y - cy
        if abs(dy) < 1.0:
            w = math.sqrt(1.0 - dy * dy)
            out.extend((math.atan2(dy, w), math.atan2(dy, -w)))
    return out


def _in_box(cx, cy, theta, box) -> bool:
    x0, x1, y0, y1 = box
    px = cx + math.cos(theta)
    py = cy + math.sin(theta)
    return x0 <= px <= x1 and y0 <= py <= y1


def angle_offset(theta: float, lo: float) -> float:
    """CCW offset of ``theta`` from ``lo`` in [0, 2*pi).  Every containment
    decision on sliced pieces runs through this one function so exact ties
    (a crossing point that is itself a slicing cut) resolve identically on
    the slicing and the querying side."""
    d = math.fmod(theta - lo, TWO_PI)
    if d < 0.0:
        d += TWO_PI
    return d


def _slice_offsets(lo: float, span: float, cuts: list[float], keep) -> list[list[float]]:
    """Kept sub-intervals of [lo, lo+span] as offset pairs from ``lo``."""
    cyclic = span >= TWO_PI - 1e-15
    offs = {0.0, span}
    for t in cuts:
        d = angle_offset(t, lo)
        if 0.0 < d < span:
            offs.add(d)
    offs = sorted(offs)
    kept: list[list[float]] = []
    for i in range(len(offs) - 1):
        a, b = offs[i], offs[i + 1]
        if b - a <= 0.0:
            continue
        if keep(lo + 0.5 * (a + b)):
            if kept and abs(kept[-1][1] - a) <= MERGE_TOL:
                kept[-1][1] = b
            else:
                kept.append([a, b])
    if cyclic and len(kept) > 1:
        if abs(kept[0][0] - 0.0) <= MERGE_TOL and abs(kept[-1][1] - span) <= MERGE_TOL:
            kept[0][0] = kept[-1][0] - span
            kept.pop()
    return kept


def _slice_interval(lo: float, span: float, cuts: list[float], keep) -> list[tuple[float, float]]:
    """Slice the CCW interval [lo, lo+span] at the given absolute angles and
    keep sub-intervals whose midpoint satisfies ``keep``; adjacent kept
    intervals are merged.  For span == 2*pi the interval is cyclic."""
    out = []
    for a, b in _slice_offsets(lo, span, cuts, keep):
        alo, ahi = lo + a, lo + b
        if ahi > alo:
            out.append((alo, ahi))
    return out


def clip_arc_to_box(arc: UnitArc, box) -> list[tuple[float, float]]:
    """Maximal angular intervals of the arc inside the closed box."""
    cx, cy = arc.center.x, arc.center.y
    cuts = _circle_box_cut_angles(cx, cy, box)
    return _slice_interval(arc.theta_start, arc.span, cuts,
                           lambda t: _in_box(cx, cy, t, box))


# ---------------------------------------------------------------------------
# clipped arcs and extending components


@dataclass
class ClippedArc:
    cid: int                  # index within the subproblem
    base: UnitArc             # original input arc
    piece: UnitArc            # sub-arc inside C
    ext_lo: float = 0.0       # extending component (angles on the base circle)
    ext_hi: float = 0.0
    ext_key: int = -1         # index of the deduped extending arc


def clip_arcs_to_cell(arcs: list[UnitArc], box,
                      max_pieces: int = 8) -> list[ClippedArc]:
    """Clip each arc to the box.

    A circle meets the square in at most two components, but an arc whose
    span approaches a full turn can cover one component in two separate
    stretches, so three clip pieces are legitimate.  The cap only guards
    against broken geometry."""
    out = []
    pid = 0
    for a in arcs:
        spans = clip_arc_to_box(a, box)
        if len(spans) > max_pieces:
            raise DegenerateInput(
                f"arc {a.id} meets the cell in {len(spans)} pieces",
                pair=(a.id, a.id))
        for lo, hi in spans:
            piece = a.subarc(lo, hi, new_id=pid)
            out.append(ClippedArc(pid, a, piece))
            pid += 1
    return out


def attach_extending_components(clips: list[ClippedArc], box):
    """Compute the circle component of the box containing each clip and
    dedupe the components; returns (ext_curves, ext_to_clips).

    ext_curves: list of lists of x-monotone Curve pieces, one per component,
    with owner set to the component index."""
    comp_cache: dict[tuple, int] = {}
    ext_intervals: list[tuple[float, float, UnitArc]] = []
    ext_to_clips: list[list[ClippedArc]] = []
    for clip in clips:
        a = clip.base
        cx, cy = a.center.x, a.center.y
        full = UnitArc(-1, a.center, 0.0, TWO_PI)
        comps = clip_arc_to_box(full, box)
        mid = 0.5 * (clip.piece.theta_start + clip.piece.theta_end)
        comp = None
        for lo, hi in comps:
            d = math.fmod(mid - lo, TWO_PI)
            if d < 0.0:
                d += TWO_PI
            if d <= (hi - lo) + 1e-12:
                comp = (lo, hi)
                break
        if comp is None:
            comp = (clip.piece.theta_start, clip.piece.theta_end)
        key = (a.base_id, round(norm_angle(comp[0]), 12))
        idx = comp_cache.get(key)
        if idx is None:
            idx = len(ext_intervals)
            comp_cache[key] = idx
            ext_intervals.append((comp[0], comp[1], a))
            ext_to_clips.append([])
        clip.ext_lo, clip.ext_hi = comp
        clip.ext_key = idx
        ext_to_clips[idx].append(clip)
    ext_curves = []
    for idx, (lo, hi, a) in enumerate(ext_intervals):
        ext_curves.append(circle_pieces(a.center.x, a.center.y, 1.0,
                                        lo, hi, owner=idx))
    return ext_curves, ext_to_clips


# ---------------------------------------------------------------------------
# trimming inside a pseudo-trapezoid


@dataclass
class CoupledData:
    axis: str                 # 'x' or 'y' (u-coordinate of the separation)
    z: Point                  # endpoint of the piece nearer the coupled arc
    z_u: float
    away: int                 # free endpoint must satisfy u*away > z_u*away
    comp_lo: float            # coupled component (angles on the circle)
    comp_hi: float
    side: str                 # left_of/right_of/below/above coupled arc


@dataclass
class TrimmedArc:
    piece: UnitArc
    clip: ClippedArc
    kind: str                 # "long" | "short"
    resident: bool = False
    shape: str = "other"      # "full" | "partial" | "other" (long pieces)
    coupled: CoupledData | None = None
    # offset interval from the clip's start angle; the tie-exact form of
    # the piece used for crossing-point attribution
    off_lo: float = 0.0
    off_hi: float = 0.0

    @property
    def base_id(self) -> int:
        return self.clip.base.base_id

    def holds_angle(self, theta: float) -> bool:
        d = angle_offset(theta, self.clip.piece.theta_start)
        return self.off_lo <= d <= self.off_hi


def _point_membership(cell: PseudoTrapezoid, cx: float, cy: float,
                      theta: float, circle_key) -> bool:
    """Half-open membership of the circle point at ``theta``; stretches that
    ride a boundary curve of the same circle resolve by the bottom-owns rule."""
    px = cx + math.cos(theta)
    py = cy + math.sin(theta)
    if not (cell.left_x <= px < cell.right_x):
        return False
    for side, is_bottom in ((cell.bottom, True), (cell.top, False)):
        if side is None or side.kind != "arc":
            continue
        if side.circle_key == circle_key:
            same_branch = (math.sin(theta) >= 0.0) == (side.branch == 1)
            if same_branch and side.x_lo - 1e-12 <= px <= side.x_hi + 1e-12:
                return is_bottom
    if cell.bottom is not None and not (py >= cell.bottom.y_at(px)):
        return False
    if cell.top is not None and not (py < cell.top.y_at(px)):
        return False
    return True


def slice_arc_in_cell(center: Point, lo: float, hi: float,
                      cell: PseudoTrapezoid,
                      with_offsets: bool = False):
    """Sub-intervals of the arc [lo, hi] owned by the cell; the flag marks
    stretches that ride one of the cell's boundary curves.

    With ``with_offsets`` each entry is (abs_lo, abs_hi, off_lo, off_hi,
    resident); the offsets are exact slicing coordinates from ``lo``."""
    cx, cy = center.x, center.y
    ck = (cx, cy, 1.0)
    cuts = []
    for x in (cell.left_x, cell.right_x):
        dx = x - cx
        if abs(dx) < 1.0:
            h = math.sqrt(1.0 - dx * dx)
            cuts.extend((math.atan2(h, dx), math.atan2(-h, dx)))
    for side in (cell.bottom, cell.top):
        if side is None:
            continue
        if side.kind == "arc" and side.circle_key == ck:
            # cuts at the boundary piece's own extent
            for x in (side.x_lo, side.x_hi):
                dx = min(max(x - cx, -1.0), 1.0)
                base = math.acos(dx)
                cuts.extend((base, -base))
        else:
            cuts.extend(circle_curve_crossing_angles(cx, cy, 1.0, side))

    offs = _slice_offsets(lo, hi - lo, cuts,
                          lambda t: _point_membership(cell, cx, cy, t, ck))
    out = []
    for oa, ob in offs:
        a, b = lo + oa, lo + ob
        if not (b > a):
            continue
        tm = 0.5 * (a + b)
        resident = False
        for side in (cell.bottom, cell.top):
            if side is not None and side.kind == "arc" and side.circle_key == ck:
                same_branch = (math.sin(tm) >= 0.0) == (side.branch == 1)
                px = cx + math.cos(tm)
                if same_branch and side.x_lo - 1e-12 <= px <= side.x_hi + 1e-12:
                    resident = True
        if with_offsets:
            out.append((a, b, oa, ob, resident))
        else:
            out.append((a, b, resident))
    return out


def circle_components_in_cell(center: Point,
                              cell: PseudoTrapezoid) -> list[tuple[float, float, bool]]:
    """Components of the full circle owned by the cell."""
    return slice_arc_in_cell(center, 0.0, TWO_PI, cell)


def _point_membership_closed(cell: PseudoTrapezoid, cx: float, cy: float,
                             theta: float, circle_key) -> bool:
    px = cx + math.cos(theta)
    py = cy + math.sin(theta)
    if not (cell.left_x <= px <= cell.right_x):
        return False
    for side in (cell.bottom, cell.top):
        if side is None or side.kind != "arc":
            continue
        if side.circle_key == circle_key:
            same_branch = (math.sin(theta) >= 0.0) == (side.branch == 1)
            if same_branch and side.x_lo - 1e-12 <= px <= side.x_hi + 1e-12:
                return True
    if cell.bottom is not None and not (py >= cell.bottom.y_at(px)):
        return False
    if cell.top is not None and not (py <= cell.top.y_at(px)):
        return False
    return True


def circle_components_closed(center: Point,
                             cell: PseudoTrapezoid) -> list[tuple[float, float]]:
    """Components of the full circle within the closed cell.  This is the
    geometric notion shape classification relies on: a long piece is full
    exactly when it covers the single closed component."""
    cx, cy = center.x, center.y
    ck = (cx, cy, 1.0)
    cuts = []
    for x in (cell.left_x, cell.right_x):
        dx = x - cx
        if abs(dx) < 1.0:
            h = math.sqrt(1.0 - dx * dx)
            cuts.extend((math.atan2(h, dx), math.atan2(-h, dx)))
    for side in (cell.bottom, cell.top):
        if side is None:
            continue
        if side.kind == "arc" and side.circle_key == ck:
            for x in (side.x_lo, side.x_hi):
                dx = min(max(x - cx, -1.0), 1.0)
                base = math.acos(dx)
                cuts.extend((base, -base))
        else:
            cuts.extend(circle_curve_crossing_angles(cx, cy, 1.0, side))
    spans = _slice_interval(
        0.0, TWO_PI, cuts,
        lambda t: _point_membership_closed(cell, cx, cy, t, ck))
    return [(a, b) for a, b in spans]


def strict_contains(cell: PseudoTrapezoid, x: float, y: float) -> bool:
    if not (cell.left_x < x < cell.right_x):
        return False
    if cell.bottom is not None and not (y > cell.bottom.y_at(x)):
        return False
    if cell.top is not None and not (y < cell.top.y_at(x)):
        return False
    return True


# ---------------------------------------------------------------------------
# separation frames


@dataclass(frozen=True)
class Separation:
    """Relation of the red-center cell to the counting cell: 'below', 'above',
    'left', 'right', or 'none' (same cell)."""
    kind: str

    @property
    def axis(self) -> str | None:
        if self.kind in ("below", "above"):
            return "x"
        if self.kind in ("left", "right"):
            return "y"
        return None


def separation_of(center_key: tuple[int, int], cell_key: tuple[int, int]) -> Separation:
    cx, cy = center_key
    kx, ky = cell_key
    if cy < ky:
        return Separation("below")
    if cy > ky:
        return Separation("above")
    if cx < kx:
        return Separation("left")
    if cx > kx:
        return Separation("right")
    return Separation("none")


def _u(p: Point, axis: str) -> float:
    return p.x if axis == "x" else p.y


def coupled_data_for(piece: UnitArc, comp2_lo: float, comp2_hi: float,
                     sep: Separation) -> CoupledData | None:
    """Coupled-arc bookkeeping for a partial long piece; None without a
    separation axis."""
    axis = sep.axis
    if axis is None:
        return None
    c = piece.center
    p0, p1 = piece.endpoints()
    q0 = Point(c.x + math.cos(comp2_lo), c.y + math.sin(comp2_lo))
    q1 = Point(c.x + math.cos(comp2_hi), c.y + math.sin(comp2_hi))
    piece_u = (_u(p0, axis), _u(p1, axis))
    comp_u = (_u(q0, axis), _u(q1, axis))
    if max(piece_u) <= min(comp_u):
        # piece sits on the low-u side of the coupled arc
        z, z_u = (p0, piece_u[0]) if piece_u[0] >= piece_u[1] else (p1, piece_u[1])
        away = -1
        side = "left_of" if axis == "x" else "below"
    else:
        z, z_u = (p0, piece_u[0]) if piece_u[0] <= piece_u[1] else (p1, piece_u[1])
        away = +1
        side = "right_of" if axis == "x" else "above"
    return CoupledData(axis=axis, z=z, z_u=z_u, away=away,
                       comp_lo=comp2_lo, comp_hi=comp2_hi, side=side)


def coupled_arc_data(s_r: UnitArc, cell_box, tau: PseudoTrapezoid,
                     sep: Separation) -> dict:
    """Public surface: partial/coupled diagnosis of a long arc in tau."""
    comps = circle_components_closed(s_r.center, tau)
    if len(comps) == 0:
        raise DegenerateInput(f"arc {s_r.id}: circle misses the cell")
    if len(comps) == 1:
        return {"is_partial": False, "coupled": None, "z": None, "side": None}
    if len(comps) > 2:
        raise DegenerateInput(
            f"arc {s_r.id}: circle meets the cell in {len(comps)} components")
    mid = 0.5 * (s_r.theta_start + s_r.theta_end)
    own = None
    other = None
    for (lo, hi) in comps:
        d = math.fmod(mid - lo, TWO_PI)
        if d < 0.0:
            d += TWO_PI
        if d <= (hi - lo) + 1e-9:
            own = (lo, hi)
        else:
            other = (lo, hi)
    if own is None or other is None:
        raise DegenerateInput(f"arc {s_r.id}: cannot match its component")
    cd = coupled_data_for(s_r, other[0], other[1], sep)
    coupled_arc = UnitArc(-1, s_r.center, other[0], other[1])
    if cd is None:
        return {"is_partial": True, "coupled": coupled_arc, "z": None,
                "side": None}
    return {"is_partial": True, "coupled": coupled_arc, "z": cd.z,
            "side": cd.side}

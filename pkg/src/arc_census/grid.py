"""Square-cell cover of the input arcs.

Cells are axis-parallel squares of side 1/sqrt(2) on a fixed lattice.  The
occupied cells (those holding at least one arc center) are dilated by L-inf
lattice radius 2; the dilation covers every point of every arc because an
arc stays within distance 1 of its center and 3 * side = 3/sqrt(2) > 1 + side.
Each cell's neighbor set N(C) is the occupied cells within lattice offset 2,
so |N(C)| <= 25 and any arc touching C has its center in some cell of N(C).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geom import Point, UnitArc, circle_circle_points

SIDE = 1.0 / math.sqrt(2.0)

Key = tuple[int, int]


def cell_key_for_point(x: float, y: float, side: float = SIDE) -> Key:
    """Lattice cell owning (x, y); exact-boundary ties go to the lexicographically
    smaller cell."""
    ix = math.floor(x / side)
    iy = math.floor(y / side)
    if x == ix * side:
        ix -= 1
    if y == iy * side:
        iy -= 1
    return ix, iy


@dataclass
class GridCell:
    ix: int
    iy: int
    centers: list[int] = field(default_factory=list)
    neighbors: list[Key] = field(default_factory=list)

    @property
    def key(self) -> Key:
        return (self.ix, self.iy)

    @property
    def box(self) -> tuple[float, float, float, float]:
        return (self.ix * SIDE, (self.ix + 1) * SIDE,
                self.iy * SIDE, (self.iy + 1) * SIDE)


@dataclass
class GridCover:
    cells: dict[Key, GridCell]
    occupied: list[Key]

    def cell(self, key: Key) -> GridCell:
        return self.cells[key]


def build_grid_cover(arcs: list[UnitArc]) -> GridCover:
    cells: dict[Key, GridCell] = {}
    occupied: dict[Key, GridCell] = {}
    for a in arcs:
        k = cell_key_for_point(a.center.x, a.center.y)
        cell = occupied.get(k)
        if cell is None:
            cell = GridCell(k[0], k[1])
            occupied[k] = cell
        cell.centers.append(a.id)
    # dilate occupied cells by lattice radius 2
    for (ix, iy) in occupied:
        for dx in range(-2, 3):
            for dy in range(-2, 3):
                k = (ix + dx, iy + dy)
                if k not in cells:
                    cells[k] = occupied.get(k, GridCell(k[0], k[1]))
    for k, cell in occupied.items():
        if cells.get(k) is not cell:
            cells[k] = cell
    occ_keys = sorted(occupied)
    occ_set = set(occ_keys)
    for k, cell in cells.items():
        nb = []
        for dx in range(-2, 3):
            for dy in range(-2, 3):
                kk = (k[0] + dx, k[1] + dy)
                if kk in occ_set:
                    nb.append(kk)
        cell.neighbors = sorted(nb)
    return GridCover(cells=cells, occupied=occ_keys)


# ---------------------------------------------------------------------------
# arc vs box


def _point_in_box(p: Point, x0, x1, y0, y1) -> bool:
    return x0 <= p.x <= x1 and y0 <= p.y <= y1


def _circle_vline_angles(c: Point, x: float) -> list[float]:
    dx = x - c.x
    if abs(dx) >= 1.0:
        return []
    h = math.sqrt(1.0 - dx * dx)
    return [math.atan2(h, dx), math.atan2(-h, dx)]


def _circle_hline_angles(c: Point, y: float) -> list[float]:
    dy = y - c.y
    if abs(dy) >= 1.0:
        return []
    w = math.sqrt(1.0 - dy * dy)
    return [math.atan2(dy, w), math.atan2(dy, -w)]


def arc_intersects_box(arc: UnitArc, x0, x1, y0, y1) -> bool:
    """Whether any point of the arc lies in the closed box."""
    c = arc.center
    if not arc.is_full_circle:
        for e in arc.endpoints():
            if _point_in_box(e, x0, x1, y0, y1):
                return True
    # crossings of the circle with the four edge lines, restricted to the arc
    for x in (x0, x1):
        for t in _circle_vline_angles(c, x):
            if arc.contains_angle(t):
                y = c.y + math.sin(t)
                if y0 <= y <= y1:
                    return True
    for y in (y0, y1):
        for t in _circle_hline_angles(c, y):
            if arc.contains_angle(t):
                x = c.x + math.cos(t)
                if x0 <= x <= x1:
                    return True
    return False


def cells_intersecting_arc(cover: GridCover, arc: UnitArc) -> list[GridCell]:
    """Cover cells whose closed boxes the arc meets (at most 16)."""
    cx, cy = arc.center.x, arc.center.y
    ix0 = math.floor((cx - 1.0) / SIDE) - 1
    ix1 = math.floor((cx + 1.0) / SIDE) + 1
    iy0 = math.floor((cy - 1.0) / SIDE) - 1
    iy1 = math.floor((cy + 1.0) / SIDE) + 1
    out = []
    for ix in range(ix0, ix1 + 1):
        for iy in range(iy0, iy1 + 1):
            k = (ix, iy)
            cell = cover.cells.get(k)
            if cell is None:
                continue
            x0, x1, y0, y1 = cell.box
            if arc_intersects_box(arc, x0, x1, y0, y1):
                out.append(cell)
    return out


def point_cell_key(p: Point) -> Key:
    return cell_key_for_point(p.x, p.y)

import math
from collections import defaultdict

import numpy as np
import pytest

from arc_census.decomp import PairDecomposition
from arc_census.geom import Point, UnitArc
from arc_census.grid import (build_grid_cover, cell_key_for_point,
                             cells_intersecting_arc)
from arc_census.oracle import gen_instance, InstanceSpec
from arc_census.trim import clip_arcs_to_cell, separation_of

TWO_PI = 2.0 * math.pi


def leaf_subproblems(n=150, box=1.05, seed=0, span=(0.6, TWO_PI), r=2,
                     top_cells=2, top_groups=3):
    """Decomposed cell-pair subproblems from a dense random instance.

    Yields (dec, leaf, sets1, sets2, sep1, sep2, same, red_box, blue_box)."""
    arcs = gen_instance(InstanceSpec(n=n, box=box, seed=seed, span_range=span))
    cover = build_grid_cover(arcs)
    cell_arcs = defaultdict(list)
    for a in arcs:
        for c in cells_intersecting_arc(cover, a):
            cell_arcs[c.key].append(a)
    keys = sorted(cell_arcs, key=lambda k: -len(cell_arcs[k]))[:top_cells]
    for key in keys:
        box_c = cover.cells[key].box
        by_center = defaultdict(list)
        for a in cell_arcs[key]:
            by_center[cell_key_for_point(a.center.x, a.center.y)].append(a)
        pl = sorted(by_center, key=lambda k: -len(by_center[k]))[:top_groups]
        for i, k1 in enumerate(pl):
            for k2 in pl[i:]:
                same = k1 == k2
                c1 = clip_arcs_to_cell(by_center[k1], box_c)
                c2 = c1 if same else clip_arcs_to_cell(by_center[k2], box_c)
                if not c1 or not c2:
                    continue
                sep1 = separation_of(k1, key)
                sep2 = separation_of(k2, key)
                dec = PairDecomposition(box_c, c1, c2,
                                        np.random.default_rng(seed + 1), r=r)
                b1 = cover.cells[k1].box
                b2 = cover.cells[k2].box
                for leaf in dec.cutting.leaves:
                    s1, s2 = dec.cell_sets(leaf, sep1, sep2)
                    yield dec, leaf, s1, s2, sep1, sep2, same, b1, b2


def rotated_triangle(rot=0.3, off=(0.13, 0.17), side=1.0):
    """Three full unit circles centered on an equilateral triangle, rotated
    off the axis-aligned degeneracies."""
    h = side * math.sqrt(3) / 2
    pts = [(0.0, 0.0), (side, 0.0), (side / 2, h)]
    c, s = math.cos(rot), math.sin(rot)
    return [UnitArc(i, Point(px * c - py * s + off[0], px * s + py * c + off[1]),
                    0.0, TWO_PI) for i, (px, py) in enumerate(pts)]


def arc_deg(i, cx, cy, a0, a1, color="none"):
    return UnitArc(i, Point(cx, cy), math.radians(a0), math.radians(a1), color)


@pytest.fixture
def triangle():
    return rotated_triangle()

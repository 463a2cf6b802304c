import math

import numpy as np

from arc_census.geom import Point, UnitArc
from arc_census.grid import (SIDE, build_grid_cover, cell_key_for_point,
                             cells_intersecting_arc, arc_intersects_box)
from arc_census.oracle import gen_instance, InstanceSpec

TWO_PI = 2 * math.pi


def test_single_arc_dilation():
    cover = build_grid_cover([UnitArc(0, Point(0.1, 0.1), 0, TWO_PI)])
    assert len(cover.occupied) == 1
    assert len(cover.cells) == 25
    occ = cover.occupied[0]
    for cell in cover.cells.values():
        assert occ in cell.neighbors


def test_two_far_centers():
    arcs = [UnitArc(0, Point(0.1, 0.1), 0, TWO_PI),
            UnitArc(1, Point(100.1, 0.1), 0, TWO_PI)]
    cover = build_grid_cover(arcs)
    assert len(cover.occupied) == 2
    assert len(cover.cells) == 50
    for cell in cover.cells.values():
        assert len(cell.neighbors) == 1


def test_neighbor_sum_bound():
    arcs = gen_instance(InstanceSpec(n=1000, box=10.0, seed=2))
    cover = build_grid_cover(arcs)
    total = sum(len(cover.cells[nb].centers)
                for cell in cover.cells.values() for nb in cell.neighbors)
    assert total <= 25 * len(arcs)
    assert len(cover.cells) <= 25 * len(arcs)


def test_coverage_of_arc_points():
    arcs = gen_instance(InstanceSpec(n=200, box=4.0, seed=3))
    cover = build_grid_cover(arcs)
    for a in arcs[:50]:
        for t in np.linspace(a.theta_start, a.theta_end, 64):
            p = a.point_at(float(t))
            key = cell_key_for_point(p.x, p.y)
            assert key in cover.cells, (p, key)


def test_neighbor_soundness():
    arcs = gen_instance(InstanceSpec(n=150, box=3.0, seed=4))
    cover = build_grid_cover(arcs)
    for a in arcs:
        home = cell_key_for_point(a.center.x, a.center.y)
        for cell in cells_intersecting_arc(cover, a):
            assert home in cell.neighbors


def test_cells_intersecting_arc_bound_and_soundness():
    rng = np.random.default_rng(7)
    arcs = gen_instance(InstanceSpec(n=120, box=3.0, seed=5))
    cover = build_grid_cover(arcs)
    for a in arcs:
        cells = cells_intersecting_arc(cover, a)
        assert len(cells) <= 16
        keys = {c.key for c in cells}
        # every sampled arc point lands in a listed cell
        for t in rng.uniform(a.theta_start, a.theta_end, 64):
            p = a.point_at(float(t))
            assert cell_key_for_point(p.x, p.y) in keys
        # and each listed cell really meets the arc
        for c in cells:
            x0, x1, y0, y1 = c.box
            assert arc_intersects_box(a, x0, x1, y0, y1)


def test_tiny_arc_single_cell():
    a = UnitArc(0, Point(0.0, 0.0), 0.2, 0.21)
    cover = build_grid_cover([a])
    cells = cells_intersecting_arc(cover, a)
    assert len(cells) == 1


def test_boundary_tie_goes_to_smaller_cell():
    assert cell_key_for_point(0.0, 0.0) == (-1, -1)
    assert cell_key_for_point(SIDE, SIDE) == (0, 0)
    assert cell_key_for_point(SIDE / 2, SIDE / 2) == (0, 0)

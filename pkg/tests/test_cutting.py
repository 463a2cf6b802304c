import math
from pathlib import Path

import numpy as np
import pytest

from arc_census.curves import circle_pieces, seg
from arc_census.cutting import (box_cell, build_hierarchical_cutting, dump,
                                locate_path)
from arc_census.errors import OnBoundary
from arc_census.oracle import gen_instance, InstanceSpec

GOLDEN = Path(__file__).parent / "data" / "cutting_dump.txt"


def build_items(n, seed, box=3.0):
    arcs = gen_instance(InstanceSpec(n=n, box=box, seed=seed))
    items = []
    for a in arcs:
        items.extend(circle_pieces(a.center.x, a.center.y, 1.0,
                                   a.theta_start, a.theta_end, owner=a.id))
    return items


def region_for(box=3.0):
    return box_cell(-1.5, box + 1.5, -1.5, box + 1.5, pad=1e-9)


def test_single_segment_r1():
    items = [seg(0.0, 0.0, 1.0, 0.5, owner=0)]
    cut = build_hierarchical_cutting(items, 1, box_cell(-1, 2, -1, 2),
                                     rng=np.random.default_rng(0))
    assert len(cut.levels) == 1
    assert [c.owner for c in cut.levels[0][0].items] == [0]


def test_crossing_bounds_hold():
    items = build_items(600, seed=11)
    n = len(items)
    cut = build_hierarchical_cutting(items, 10, region_for(),
                                     rng=np.random.default_rng(1))
    for i, level in enumerate(cut.levels):
        bound = n / 2 ** i
        for cell in level:
            assert len(cell.items) <= bound


def test_total_crossing_size():
    items = build_items(400, seed=12)
    n = len(items)
    r = 8
    cut = build_hierarchical_cutting(items, r, region_for(),
                                     rng=np.random.default_rng(2))
    assert cut.stats.crossing_total <= 40 * n * r


def test_locate_matches_exhaustive():
    items = build_items(300, seed=13)
    cut = build_hierarchical_cutting(items, 8, region_for(),
                                     rng=np.random.default_rng(3))
    rng = np.random.default_rng(4)
    for _ in range(400):
        x = float(rng.uniform(-1, 4))
        y = float(rng.uniform(-1, 4))
        path = locate_path(cut, x, y)
        assert len(path) == len(cut.levels)
        for parent, child in zip(path, path[1:]):
            assert child in parent.children
        hits = [c for c in cut.leaves if c.contains(x, y)]
        assert len(hits) == 1 and hits[0] is path[-1]


def test_children_tile_parent():
    items = build_items(300, seed=14)
    cut = build_hierarchical_cutting(items, 8, region_for(),
                                     rng=np.random.default_rng(5))
    rng = np.random.default_rng(6)
    for level in cut.levels[:-1]:
        for parent in level:
            if not parent.children:
                continue
            for _ in range(20):
                x = float(rng.uniform(parent.left_x, parent.right_x))
                yb = parent.bottom.y_at(x) if parent.bottom else -2.0
                yt = parent.top.y_at(x) if parent.top else 5.0
                if yt <= yb:
                    continue
                y = float(rng.uniform(yb, yt))
                if not parent.contains(x, y):
                    continue
                assert sum(c.contains(x, y) for c in parent.children) == 1


def test_outside_region_raises():
    items = build_items(50, seed=15)
    cut = build_hierarchical_cutting(items, 4, region_for(),
                                     rng=np.random.default_rng(7))
    with pytest.raises(OnBoundary):
        locate_path(cut, 100.0, 100.0)


def test_strict_mode_raises_near_boundary():
    items = build_items(50, seed=16)
    cut = build_hierarchical_cutting(items, 4, region_for(),
                                     rng=np.random.default_rng(8))
    leaf = cut.leaves[0]
    x = leaf.left_x  # exactly on the wall
    y = 0.5 * (leaf.bottom.y_at(x) + leaf.top.y_at(x))
    if leaf.contains(x, y):
        with pytest.raises(OnBoundary):
            locate_path(cut, x, y, strict_eps=1e-9)


def test_deterministic_given_seed():
    items1 = build_items(200, seed=17)
    items2 = build_items(200, seed=17)
    cut1 = build_hierarchical_cutting(items1, 8, region_for(),
                                      rng=np.random.default_rng(9))
    cut2 = build_hierarchical_cutting(items2, 8, region_for(),
                                      rng=np.random.default_rng(9))
    assert dump(cut1) == dump(cut2)


def test_dump_golden():
    items = build_items(40, seed=18, box=2.0)
    cut = build_hierarchical_cutting(items, 4, box_cell(-1.5, 3.5, -1.5, 3.5,
                                                        pad=1e-9),
                                     rng=np.random.default_rng(10))
    text = dump(cut)
    if not GOLDEN.exists():
        GOLDEN.parent.mkdir(exist_ok=True)
        GOLDEN.write_text(text)
    assert text == GOLDEN.read_text()

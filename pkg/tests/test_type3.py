"""Long-short counting: region machinery against direct pair scans."""

import math

import numpy as np
import pytest

from arc_census.geom import Point, UnitArc, arc_pair_crossing_count
from arc_census.grid import SIDE
from arc_census.trim import Separation, TrimmedArc, clip_arcs_to_cell
from arc_census.decomp import PairDecomposition
from arc_census.type3 import (Type3Counts, _coupled_cross_count,
                              machinery_counts, machinery_eligible)
from conftest import leaf_subproblems

TWO_PI = 2 * math.pi


def scan_reference(reds, blues, same_group):
    """Direct classification of machinery-eligible piece pairs."""
    out = Type3Counts()
    for r in reds:
        for b in blues:
            if same_group and r.base_id == b.base_id:
                continue
            cnt = arc_pair_crossing_count(r.piece, b.piece)
            if cnt == 2:
                out.t32 += 1
            elif cnt == 1:
                if r.shape == "full":
                    out.t311 += 1
                elif _coupled_cross_count(b.piece, r) >= 1:
                    out.t3122 += 1
                else:
                    out.t3121 += 1
    return out


def collect_cases(**kw):
    for dec, leaf, s1, s2, sep1, sep2, same, b1, b2 in leaf_subproblems(**kw):
        reds = [t for t in s1 if t.kind == "long" and machinery_eligible(t, sep1)]
        blues = [t for t in s2 if t.kind == "short" and not t.resident]
        if reds and blues:
            yield reds, blues, sep1, same, b1, len(s1) + len(s2)


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_machinery_matches_scan(seed):
    cases = buckets = 0
    for reds, blues, sep, same, red_box, n_tau in collect_cases(
            n=150, box=1.05, seed=seed):
        res = machinery_counts(reds, blues, red_box, sep, same,
                               np.random.default_rng(7), n_tau=n_tau)
        ref = scan_reference(reds, blues, same)
        assert (res.t311, res.t3121, res.t3122, res.t32) == \
               (ref.t311, ref.t3121, ref.t3122, ref.t32)
        cases += 1
        buckets += ref.t311 + ref.t3121 + ref.t3122 + ref.t32
    assert cases > 20 and buckets > 0


def test_grouping_invariance():
    for reds, blues, sep, same, red_box, n_tau in collect_cases(
            n=170, box=1.0, seed=5):
        if len(blues) < 6:
            continue
        a = machinery_counts(reds, blues, red_box, sep, same,
                             np.random.default_rng(1), n_tau=n_tau,
                             grouping="off")
        b = machinery_counts(reds, blues, red_box, sep, same,
                             np.random.default_rng(1), n_tau=n_tau,
                             grouping="force")
        assert (a.t311, a.t3121, a.t3122, a.t32) == \
               (b.t311, b.t3121, b.t3122, b.t32)


def _sliver_blue_pair():
    """A long partial arc whose circle pokes over the cell's top edge, plus
    a short arc crossing both of its pieces once each."""
    cell_box = (0.0, SIDE, 0.0, SIDE)
    c_r = Point(0.35, -0.26)
    red_full = UnitArc(0, c_r, 0, TWO_PI)
    c_b = Point(0.35, 1.62)
    blue = UnitArc(1, c_b, math.radians(-110), math.radians(-70))
    return cell_box, red_full, blue


def test_partial_straddle_configuration():
    """The constructed pair crosses the long arc once and its coupled
    component once; the blue center is outside the long arc's wedge, so the
    four-condition count stays at zero while the straddle bucket fires."""
    cell_box, red_full, blue = _sliver_blue_pair()
    clips_r = clip_arcs_to_cell([red_full], cell_box)
    clips_b = clip_arcs_to_cell([blue], cell_box)
    assert len(clips_r) == 2 and len(clips_b) == 1
    dec = PairDecomposition(cell_box, clips_r, clips_b,
                            np.random.default_rng(3), r=1)
    leaf = dec.cutting.leaves[0]
    sep = Separation("below")
    s1, s2 = dec.cell_sets(leaf, sep, Separation("above"))
    reds = [t for t in s1 if t.kind == "long"]
    blues = [t for t in s2 if t.kind == "short"]
    assert len(blues) == 1
    partials = [t for t in reds if t.shape == "partial"]
    assert len(partials) == 2
    for t in partials:
        assert t.coupled is not None and t.coupled.axis == "x"
    # each red piece crosses the blue once; the coupled component too
    for t in partials:
        assert arc_pair_crossing_count(t.piece, blues[0].piece) == 1
        assert _coupled_cross_count(blues[0].piece, t) == 1
    red_box = (0.0, SIDE, -SIDE, 0.0)  # grid cell of the red center
    res = machinery_counts(partials, blues, red_box, sep, False,
                           np.random.default_rng(4),
                           n_tau=len(s1) + len(s2))
    ref = scan_reference(partials, blues, False)
    assert ref.t3122 == 2
    assert (res.t311, res.t3121, res.t3122, res.t32) == (0, 0, 2, 0)
    # the blue center sits outside the narrow sliver wedges: the
    # four-condition count must not go negative against the straddle count
    assert res.k2 == 0
    assert res.t32 == res.k2 - res.k3_wedge == 0


def test_twice_crossing_partial_configuration():
    """A short blue crossing one piece of a partial long arc twice: the
    four-condition machinery must count the pair exactly once."""
    cell_box = (0.0, SIDE, 0.0, SIDE)
    c_r = Point(0.35, -0.26)
    red_full = UnitArc(0, c_r, 0, TWO_PI)
    norm = math.hypot(0.31, 0.955)
    ux, uy = 0.31 / norm, 0.955 / norm
    found = None
    for d in np.linspace(1.9992, 1.99985, 30):
        c_b = Point(c_r.x + d * ux, c_r.y + d * uy)
        blue = UnitArc(1, c_b, math.radians(250), math.radians(290))
        clips_r = clip_arcs_to_cell([red_full], cell_box)
        clips_b = clip_arcs_to_cell([blue], cell_box)
        if len(clips_r) != 2 or not clips_b:
            continue
        hit = any(arc_pair_crossing_count(cr.piece, cb.piece) == 2
                  for cr in clips_r for cb in clips_b)
        if hit:
            found = blue
            break
    assert found is not None, "sweep should produce a twice-crossing pair"
    clips_r = clip_arcs_to_cell([red_full], cell_box)
    clips_b = clip_arcs_to_cell([found], cell_box)
    dec = PairDecomposition(cell_box, clips_r, clips_b,
                            np.random.default_rng(2), r=1)
    leaf = dec.cutting.leaves[0]
    sep = Separation("below")
    s1, s2 = dec.cell_sets(leaf, sep, sep)
    reds = [t for t in s1 if t.kind == "long" and machinery_eligible(t, sep)]
    blues = [t for t in s2 if t.kind == "short" and not t.resident]
    assert reds and blues
    red_box = (0.0, SIDE, -SIDE, 0.0)
    res = machinery_counts(reds, blues, red_box, sep, False,
                           np.random.default_rng(5), n_tau=4)
    ref = scan_reference(reds, blues, False)
    assert res.t32 == ref.t32 >= 1
    assert (res.t311, res.t3121, res.t3122) == (ref.t311, ref.t3121, ref.t3122)

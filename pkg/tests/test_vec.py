import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from arc_census.geom import Point, UnitArc, arc_pair_crossing_count
from arc_census.vec import ArcArrays, pair_crossing_counts, total_crossings_all_pairs


@settings(max_examples=300, deadline=None)
@given(st.floats(-2.5, 2.5), st.floats(-2.5, 2.5),
       st.floats(0, 6.28), st.floats(0.05, 6.283),
       st.floats(0, 6.28), st.floats(0.05, 6.283))
def test_vector_matches_scalar(cx, cy, t0a, spana, t0b, spanb):
    a = UnitArc(0, Point(0.1, -0.2), t0a, t0a + spana)
    b = UnitArc(1, Point(cx, cy), t0b, t0b + spanb)
    A = ArcArrays([a])
    B = ArcArrays([b])
    vec = int(pair_crossing_counts(A, np.array([0]), B, np.array([0]))[0])
    assert vec == arc_pair_crossing_count(a, b)


def test_total_matches_double_loop():
    rng = np.random.default_rng(5)
    arcs = [UnitArc(i, Point(float(x), float(y)), float(t), float(t) + float(s))
            for i, (x, y, t, s) in enumerate(zip(
                rng.uniform(0, 3, 40), rng.uniform(0, 3, 40),
                rng.uniform(0, 6.28, 40), rng.uniform(0.1, 6.2, 40)))]
    want = sum(arc_pair_crossing_count(arcs[i], arcs[j])
               for i in range(40) for j in range(i + 1, 40))
    assert total_crossings_all_pairs(ArcArrays(arcs)) == want

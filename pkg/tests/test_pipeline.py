import math

import numpy as np
import pytest

from arc_census.errors import DegenerateInput
from arc_census.geom import Point, UnitArc
from arc_census.oracle import (InstanceSpec, brute_count,
                               brute_count_bichromatic, check_general_position,
                               gen_instance)
from arc_census.pipeline import (CountReport, PipelineOptions, count_all,
                                 count_bichromatic, count_small_k)
from conftest import rotated_triangle

TWO_PI = 2 * math.pi
FAST = PipelineOptions(validate=False)


def test_empty_and_single():
    assert count_all([], FAST).total == 0
    one = [UnitArc(0, Point(0, 0), 0, TWO_PI)]
    assert count_all(one, FAST).total == 0


def test_triangle_six(triangle):
    rep = count_all(triangle)
    assert rep.total == 6
    assert sum(rep.by_type.get(k, 0) for k in ("t1", "t2", "t3", "t4")) == 6


@pytest.mark.parametrize("seed,n,box", [
    (0, 30, 2.0), (1, 64, 1.2), (2, 100, 0.9), (3, 128, 2.5),
    (4, 200, 1.0), (5, 256, 1.4), (6, 256, 0.8),
])
def test_oracle_equivalence(seed, n, box):
    arcs = gen_instance(InstanceSpec(n=n, box=box, seed=seed,
                                     span_range=(0.1, TWO_PI)))
    assert count_all(arcs, FAST).total == brute_count(arcs, validate=False)


def test_machinery_consistency_paths():
    arcs = gen_instance(InstanceSpec(n=220, box=0.9, seed=41,
                                     span_range=(0.1, TWO_PI)))
    want = brute_count(arcs, validate=False)
    for opts in (
            PipelineOptions(validate=False),
            PipelineOptions(validate=False, type1_machinery=False),
            PipelineOptions(validate=False, type3_machinery=False),
            PipelineOptions(validate=False, type1_machinery=False,
                            type3_machinery=False),
            PipelineOptions(validate=False, grouping="force"),
            PipelineOptions(validate=False, grouping="off"),
    ):
        assert count_all(arcs, opts).total == want


def test_small_k_matches_count_all():
    for seed in range(4):
        arcs = gen_instance(InstanceSpec(n=90, box=1.4, seed=60 + seed,
                                         span_range=(0.1, TWO_PI)))
        want = brute_count(arcs, validate=False)
        rep = count_small_k(arcs, opts=FAST)
        assert rep.total == want
        assert rep.diagnostics["k_guess_final"] >= want


def test_bichromatic_modes_agree():
    for seed in range(4):
        arcs = gen_instance(InstanceSpec(n=80, box=1.2, seed=80 + seed,
                                         span_range=(0.1, TWO_PI)))
        direct = count_bichromatic(arcs, "direct", FAST)
        ident = count_bichromatic(arcs, "identity", FAST)
        want = brute_count_bichromatic(arcs, validate=False)
        assert direct == ident == want


def test_degenerate_rejection():
    tangent = [UnitArc(0, Point(0, 0), 0, TWO_PI),
               UnitArc(1, Point(2, 0), 0, TWO_PI)]
    with pytest.raises(DegenerateInput) as e:
        count_all(tangent)
    assert e.value.pair == (0, 1)
    cocentered = [UnitArc(0, Point(0, 0), 0, TWO_PI),
                  UnitArc(1, Point(0, 0), 1, 3)]
    with pytest.raises(DegenerateInput):
        count_all(cocentered)


def test_threads_deterministic():
    arcs = gen_instance(InstanceSpec(n=150, box=1.1, seed=90,
                                     span_range=(0.1, TWO_PI)))
    a = count_all(arcs, PipelineOptions(validate=False, threads=1))
    b = count_all(arcs, PipelineOptions(validate=False, threads=4))
    assert a.total == b.total
    assert a.by_type == b.by_type


def test_type1_attribution_unique():
    arcs = gen_instance(InstanceSpec(n=140, box=0.95, seed=91,
                                     span_range=(0.5, TWO_PI)))
    rep = count_all(arcs, PipelineOptions(validate=False,
                                          instrument_type1=True))
    att = rep.diagnostics["type1_attribution"]
    seen = {}
    for (level, cell_ix, ba, bb, px, py) in att:
        seen.setdefault((ba, bb, px, py), []).append((level, cell_ix))
    # with the duplication trick each unordered pair is recorded once per
    # color order; dedupe attributions per point
    for key, cells in seen.items():
        assert len(set(cells)) == 1, (key, cells)
    assert rep.total == brute_count(arcs, validate=False)


def test_report_shape(triangle):
    rep = count_all(triangle)
    d = rep.as_dict()
    assert set(d) == {"total", "by_type", "diagnostics"}
    for k in ("t1", "t2", "t3", "t4", "t311", "t3121", "t3122", "t32",
              "t111", "t112"):
        assert k in d["by_type"]


def test_generator_margin_and_goldens():
    arcs = gen_instance(InstanceSpec(n=100, seed=7))
    assert check_general_position(arcs) == []
    # golden value frozen from the first verified oracle run
    assert brute_count(arcs) == 1134
    again = gen_instance(InstanceSpec(n=100, seed=7))
    assert all(a.center == b.center and a.theta_start == b.theta_start
               for a, b in zip(arcs, again))

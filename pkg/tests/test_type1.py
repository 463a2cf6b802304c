"""Long-long counting: the nested five-condition cascade against scans."""

import numpy as np
import pytest

from arc_census import config
from arc_census.type1 import (count_twice_pairs_ll, count_once_pairs,
                              scan_once_twice)
from conftest import leaf_subproblems


def collect_long_sets(**kw):
    for dec, cell, s1, s2, sep1, sep2, same, b1, b2 in leaf_subproblems(**kw):
        X = [t for t in s1 if t.kind == "long" and not t.resident]
        Y = [t for t in s2 if t.kind == "long" and not t.resident]
        if len(X) >= 3 and len(Y) >= 3:
            yield X, Y, same, b1, b2


@pytest.mark.parametrize("seed", [0, 3, 7])
def test_cascade_matches_scan(seed, monkeypatch):
    monkeypatch.setattr(config, "SMALL_INPUT", 4)  # force the cascade
    cases = twice_total = 0
    for X, Y, same, b1, b2 in collect_long_sets(n=150, box=1.05, seed=seed):
        want_once, want_twice = scan_once_twice(X, Y, same)
        got = count_twice_pairs_ll(X, Y, b2, b1, same, np.random.default_rng(11))
        assert got == want_twice
        assert count_once_pairs(X, Y, same) == want_once
        cases += 1
        twice_total += want_twice
    assert cases > 10


def test_cascade_on_large_sets(monkeypatch):
    monkeypatch.setattr(config, "SMALL_INPUT", 16)
    hit_twice = 0
    for X, Y, same, b1, b2 in collect_long_sets(n=220, box=0.9, seed=9,
                                                span=(2.0, 6.283), r=1):
        want = scan_once_twice(X, Y, same)[1]
        got = count_twice_pairs_ll(X, Y, b2, b1, same, np.random.default_rng(3))
        assert got == want
        hit_twice += want
    assert hit_twice >= 0

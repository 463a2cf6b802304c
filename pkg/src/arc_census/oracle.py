"""Ground-truth oracle, instance generation, and degeneracy diagnostics.

``brute_count`` is the independent reference for every acceptance test: a
plain quadratic scan over unordered pairs.  It never shares code with the
counting pipeline beyond the low-level circle intersection formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import DegenerateInput, GenerationFailure
from .geom import TWO_PI, Point, UnitArc
from .grid import SIDE
from .vec import ArcArrays, pair_crossing_points, total_crossings_all_pairs


@dataclass
class InstanceSpec:
    n: int
    box: float = 4.0
    span_range: tuple[float, float] = (0.1, TWO_PI)
    color_ratio: float = 0.5
    seed: int = 0
    margin: float = config.DEFAULT_MARGIN


# ---------------------------------------------------------------------------
# degeneracy diagnostics


def _candidate_pairs(arcs: list[UnitArc], reach: float):
    """Index pairs with center distance <= reach, via unit-lattice buckets."""
    buckets: dict[tuple[int, int], list[int]] = {}
    for i, a in enumerate(arcs):
        k = (math.floor(a.center.x), math.floor(a.center.y))
        buckets.setdefault(k, []).append(i)
    span = int(math.ceil(reach)) + 1
    reach2 = reach * reach
    for (bx, by), members in buckets.items():
        for dx in range(0, span + 1):
            for dy in range(-span, span + 1):
                if dx == 0 and dy < 0:
                    continue
                other = buckets.get((bx + dx, by + dy))
                if other is None:
                    continue
                if dx == 0 and dy == 0:
                    for ii in range(len(members)):
                        for jj in range(ii + 1, len(members)):
                            yield members[ii], members[jj]
                else:
                    for i in members:
                        a = arcs[i]
                        for j in other:
                            b = arcs[j]
                            ddx = a.center.x - b.center.x
                            ddy = a.center.y - b.center.y
                            if ddx * ddx + ddy * ddy <= reach2:
                                yield i, j


def check_general_position(arcs: list[UnitArc], margin: float | None = None) -> list[dict]:
    """Diagnostic flags; empty list means the instance is clean.

    Checks, each with the given clearance margin:
      - co-centered pairs (center distance ~ 0)
      - tangent pairs (center distance ~ 2)
      - an arc endpoint lying ~ distance 1 from another arc's center
      - pair intersection points near grid-lattice lines
      - pair intersection points near a circle's extreme x (vertical-wall guard)
    """
    if margin is None:
        margin = config.DEFAULT_MARGIN
    flags: list[dict] = []
    reach = 2.0 + 4.0 * margin
    for i, j in _candidate_pairs(arcs, reach):
        a, b = arcs[i], arcs[j]
        dx = a.center.x - b.center.x
        dy = a.center.y - b.center.y
        d = math.hypot(dx, dy)
        if d <= margin:
            flags.append({"kind": "co_centered", "ids": (a.id, b.id), "detail": d})
            continue
        if abs(d - 2.0) <= margin:
            flags.append({"kind": "tangent", "ids": (a.id, b.id), "detail": d})
        for s, other in ((a, b), (b, a)):
            if s.is_full_circle:
                continue
            for e in s.endpoints():
                de = math.hypot(e.x - other.center.x, e.y - other.center.y)
                if abs(de - 1.0) <= margin:
                    flags.append({"kind": "endpoint_on_circle",
                                  "ids": (s.id, other.id), "detail": de})
        if 0.0 < d < 2.0:
            half = d / 2.0
            h = math.sqrt(max(1.0 - half * half, 0.0))
            ux, uy = dx / d, dy / d
            mx = b.center.x + half * ux
            my = b.center.y + half * uy
            for sx in (1.0, -1.0):
                px = mx - sx * h * uy
                py = my + sx * h * ux
                fx = abs(px / SIDE - round(px / SIDE)) * SIDE
                fy = abs(py / SIDE - round(py / SIDE)) * SIDE
                if fx <= margin or fy <= margin:
                    flags.append({"kind": "crossing_on_grid_line",
                                  "ids": (a.id, b.id), "detail": (px, py)})
                for c in (a.center, b.center):
                    if abs(abs(px - c.x) - 1.0) <= config.EXTREME_GUARD:
                        flags.append({"kind": "crossing_near_extreme",
                                      "ids": (a.id, b.id), "detail": (px, py)})
    return flags


def require_general_position(arcs: list[UnitArc], margin: float | None = None) -> None:
    flags = check_general_position(arcs, margin)
    if flags:
        worst = flags[0]
        raise DegenerateInput(
            f"degenerate input: {worst['kind']} for arcs {worst['ids']}"
            f" ({len(flags)} flags total)", pair=worst["ids"])


# ---------------------------------------------------------------------------
# brute-force oracle


def brute_count(arcs: list[UnitArc], validate: bool = True,
                margin: float | None = None) -> int:
    """Number of intersection points over unordered arc pairs, counting a
    twice-intersecting pair as 2."""
    if validate:
        require_general_position(arcs, margin)
    if len(arcs) < 2:
        return 0
    return total_crossings_all_pairs(ArcArrays(arcs))


def brute_count_bichromatic(arcs: list[UnitArc], validate: bool = True) -> int:
    """Red-blue intersection points via a direct double loop."""
    if validate:
        require_general_position(arcs)
    red = [a for a in arcs if a.color == "red"]
    blue = [a for a in arcs if a.color == "blue"]
    if not red or not blue:
        return 0
    A, B = ArcArrays(red), ArcArrays(blue)
    ia = np.repeat(np.arange(A.n), B.n)
    ib = np.tile(np.arange(B.n), A.n)
    on1, _, _, on2, _, _ = pair_crossing_points(A, ia, B, ib)
    return int(on1.sum() + on2.sum())


# ---------------------------------------------------------------------------
# instance generation


def _make_arcs(cx, cy, t0, span, colors) -> list[UnitArc]:
    return [
        UnitArc(i, Point(float(cx[i]), float(cy[i])), float(t0[i]),
                float(t0[i]) + float(span[i]), str(colors[i]))
        for i in range(len(cx))
    ]


def gen_instance(spec: InstanceSpec, max_rounds: int = 10_000) -> list[UnitArc]:
    """Reproducible random instance passing check_general_position.

    Offending arcs are redrawn until the diagnostics come back clean."""
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    if n == 0:
        return []
    cx = rng.uniform(0.0, spec.box, n)
    cy = rng.uniform(0.0, spec.box, n)
    t0 = rng.uniform(0.0, TWO_PI, n)
    lo, hi = spec.span_range
    span = rng.uniform(lo, hi, n)
    n_red = int(round(n * spec.color_ratio))
    color_arr = np.array(["red"] * n_red + ["blue"] * (n - n_red))
    colors = list(color_arr[rng.permutation(n)])
    for _ in range(max_rounds):
        arcs = _make_arcs(cx, cy, t0, span, colors)
        flags = check_general_position(arcs, spec.margin)
        if not flags:
            return arcs
        bad = sorted({i for f in flags for i in f["ids"]})
        for i in bad:
            cx[i] = rng.uniform(0.0, spec.box)
            cy[i] = rng.uniform(0.0, spec.box)
            t0[i] = rng.uniform(0.0, TWO_PI)
            span[i] = rng.uniform(lo, hi)
    raise GenerationFailure(
        f"could not satisfy margin {spec.margin} after {max_rounds} rounds")

"""Arc file format.

One record per line: ``cx cy theta_start theta_end [color]`` with angles in
radians, color ``r`` or ``b``; ``#`` starts a comment, blank lines are
ignored.  Serialization uses repr-precision floats so parse/serialize
round-trips exactly.
"""

from __future__ import annotations

import math
from typing import Iterable, TextIO

from .errors import ParseError
from .geom import TWO_PI, Point, UnitArc

_COLORS = {"r": "red", "b": "blue"}
_COLOR_OUT = {"red": "r", "blue": "b"}


def parse_arcs(lines: Iterable[str]) -> list[UnitArc]:
    arcs = []
    idx = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (4, 5):
            raise ParseError(f"line {line_no}: expected 4 or 5 fields, "
                             f"got {len(parts)}", line_no)
        try:
            cx, cy, t0, t1 = (float(p) for p in parts[:4])
        except ValueError as e:
            raise ParseError(f"line {line_no}: {e}", line_no)
        color = "none"
        if len(parts) == 5:
            color = _COLORS.get(parts[4])
            if color is None:
                raise ParseError(f"line {line_no}: color must be r or b",
                                 line_no)
        span = t1 - t0
        if not (math.isfinite(cx) and math.isfinite(cy)
                and math.isfinite(span)):
            raise ParseError(f"line {line_no}: non-finite value", line_no)
        if span <= 0.0 or span > TWO_PI + 1e-9:
            raise ParseError(
                f"line {line_no}: theta_end - theta_start must be in "
                f"(0, 2*pi]", line_no)
        arcs.append(UnitArc(idx, Point(cx, cy), t0, t0 + min(span, TWO_PI),
                            color))
        idx += 1
    return arcs


def load_arcs(f: TextIO) -> list[UnitArc]:
    return parse_arcs(f)


def serialize_arcs(arcs: list[UnitArc]) -> str:
    out = []
    for a in arcs:
        fields = [repr(a.center.x), repr(a.center.y), repr(a.theta_start),
                  repr(a.theta_end)]
        if a.color in _COLOR_OUT:
            fields.append(_COLOR_OUT[a.color])
        out.append(" ".join(fields))
    return "\n".join(out) + ("\n" if out else "")

"""Global numeric tolerances.

All predicates share a single tolerance ``EPS``.  Instances are validated
against a much larger degeneracy margin (default 1e-6) before the counting
pipeline runs, so predicate decisions are never made inside the fuzzy band.
"""

import os

_ENV_VAR = "ARC_CENSUS_EPS"

DEFAULT_EPS = 1e-9
DEFAULT_MARGIN = 1e-6

EPS = float(os.environ.get(_ENV_VAR, DEFAULT_EPS))

# Sub-counters switch to a pairwise predicate scan below this input size;
# cutting overhead dominates under desk-scale thresholds.
SMALL_INPUT = 64

# Clearance required between a pair's intersection point and the extreme-x
# points of either circle.  Guards the vertical walls dropped at circle
# extremes during cutting construction against exact float ties; much
# tighter than the general-position margin on purpose.
EXTREME_GUARD = 1e-9


def set_eps(value: float) -> None:
    global EPS
    EPS = float(value)


def reload_eps_from_env() -> float:
    set_eps(os.environ.get(_ENV_VAR, DEFAULT_EPS))
    return EPS

"""Exact intersection counting for same-radius circular arcs."""

from .errors import (ArcCensusError, BoundaryCase, BuildFailure,
                     DegenerateInput, GenerationFailure, OnBoundary,
                     ParseError, SpanTooLarge)
from .geom import (Point, UnitArc, Wedge, arc_arc_intersections,
                   arc_circle_cross_twice, in_lune, in_lune_prime, in_wedge,
                   twice_crossing_conditions, wedge_of)
from .grid import GridCell, GridCover, build_grid_cover, cells_intersecting_arc
from .cutting import (HierarchicalCutting, PseudoTrapezoid,
                      build_hierarchical_cutting, dump, locate_path)
from .ranges import (DiskContainmentCounter, IntervalTree, WedgeCounter,
                     disk_containment_count, interval_tree_build, wedge_count)
from .trim import coupled_arc_data, separation_of
from .oracle import (InstanceSpec, brute_count, check_general_position,
                     gen_instance)
from .pipeline import (CountReport, PipelineOptions, count_all,
                       count_bichromatic, count_cell_pair, count_small_k)
from .fileio import load_arcs, parse_arcs, serialize_arcs

__all__ = [
    "ArcCensusError", "BoundaryCase", "BuildFailure", "DegenerateInput",
    "GenerationFailure", "OnBoundary", "ParseError", "SpanTooLarge",
    "Point", "UnitArc", "Wedge", "arc_arc_intersections",
    "arc_circle_cross_twice", "in_lune", "in_lune_prime", "in_wedge",
    "twice_crossing_conditions", "wedge_of",
    "GridCell", "GridCover", "build_grid_cover", "cells_intersecting_arc",
    "HierarchicalCutting", "PseudoTrapezoid", "build_hierarchical_cutting",
    "dump", "locate_path",
    "DiskContainmentCounter", "IntervalTree", "WedgeCounter",
    "disk_containment_count", "interval_tree_build", "wedge_count",
    "coupled_arc_data", "separation_of",
    "InstanceSpec", "brute_count", "check_general_position", "gen_instance",
    "CountReport", "PipelineOptions", "count_all", "count_bichromatic",
    "count_cell_pair", "count_small_k",
    "load_arcs", "parse_arcs", "serialize_arcs",
]

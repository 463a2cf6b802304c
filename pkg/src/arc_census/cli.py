"""Command-line interface.

Subcommands: count (pipeline), oracle (brute force), compare (both, exit 3
on mismatch), gen (random instances), bench (CSV timing rows).

Exit codes: 0 success, 1 parse/usage error, 2 degenerate input,
3 count mismatch in compare.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import config
from .errors import DegenerateInput, GenerationFailure, ParseError
from .fileio import load_arcs, serialize_arcs
from .oracle import InstanceSpec, brute_count, gen_instance
from .pipeline import CountReport, PipelineOptions, count_all, count_bichromatic, count_small_k


def _read_input(path: str):
    if path == "-":
        return load_arcs(sys.stdin)
    with open(path) as f:
        return load_arcs(f)


def _print_report(report: CountReport, fmt: str):
    if fmt == "json":
        print(json.dumps(report.as_dict(), default=float))
        return
    print(f"total {report.total}")
    for k in ("t1", "t2", "t3", "t4", "t311", "t3121", "t3122", "t32",
              "t111", "t112"):
        print(f"  {k} {report.by_type.get(k, 0)}")
    d = report.diagnostics
    print(f"  n {d.get('n', 0)} cover_cells {d.get('cover_cells', 0)} "
          f"machinery_cells {d.get('machinery_cells', 0)} "
          f"seconds {d.get('seconds', 0.0):.3f}")


def cmd_count(args) -> int:
    try:
        arcs = _read_input(args.input)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 1
    opts = PipelineOptions(threads=args.threads, seed=args.seed)
    try:
        if args.bichromatic:
            total = count_bichromatic(arcs, args.bichromatic, opts)
            report = CountReport(total=total)
            report.diagnostics["mode"] = f"bichromatic-{args.bichromatic}"
            report.diagnostics["n"] = len(arcs)
        elif args.small_k:
            report = count_small_k(arcs, opts=opts)
        else:
            report = count_all(arcs, opts)
    except DegenerateInput as e:
        print(f"degenerate input: {e} pair={e.pair}", file=sys.stderr)
        return 2
    _print_report(report, args.report)
    return 0


def cmd_oracle(args) -> int:
    try:
        arcs = _read_input(args.input)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 1
    try:
        total = brute_count(arcs)
    except DegenerateInput as e:
        print(f"degenerate input: {e} pair={e.pair}", file=sys.stderr)
        return 2
    report = CountReport(total=total)
    report.diagnostics["n"] = len(arcs)
    report.diagnostics["mode"] = "oracle"
    _print_report(report, args.report)
    return 0


def cmd_compare(args) -> int:
    try:
        arcs = _read_input(args.input)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 1
    try:
        pipeline = count_all(arcs, PipelineOptions(seed=args.seed)).total
        oracle = brute_count(arcs, validate=False)
    except DegenerateInput as e:
        print(f"degenerate input: {e} pair={e.pair}", file=sys.stderr)
        return 2
    print(f"pipeline {pipeline}")
    print(f"oracle   {oracle}")
    print(f"diff     {pipeline - oracle}")
    return 0 if pipeline == oracle else 3


def cmd_gen(args) -> int:
    spec = InstanceSpec(n=args.n, box=args.box,
                        span_range=(args.span_min, args.span_max),
                        color_ratio=args.red_frac, seed=args.seed,
                        margin=args.margin)
    try:
        arcs = gen_instance(spec)
    except GenerationFailure as e:
        print(f"generation failed: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(serialize_arcs(arcs))
    return 0


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        print("invalid --sizes", file=sys.stderr)
        return 1
    if not sizes or min(sizes) < 0:
        print("invalid --sizes", file=sys.stderr)
        return 1
    print("algo,n,seed,K,seconds,cells,resamples", flush=True)
    for n in sizes:
        for seed in range(args.seeds):
            box = max(1.0, (n / args.density) ** 0.5)
            spec = InstanceSpec(n=n, box=box, seed=seed)
            arcs = gen_instance(spec)
            cells = resamples = 0
            t0 = time.perf_counter()
            if args.algo == "oracle":
                k = brute_count(arcs, validate=False)
            elif args.algo == "smallk":
                rep = count_small_k(arcs, opts=PipelineOptions(validate=False))
                k = rep.total
                cells = rep.diagnostics.get("cutting_cells", 0)
            else:
                rep = count_all(arcs, PipelineOptions(validate=False))
                k = rep.total
                cells = rep.diagnostics.get("cutting_cells", 0)
                resamples = rep.diagnostics.get("resample_rounds", 0)
            dt = time.perf_counter() - t0
            print(f"{args.algo},{n},{seed},{k},{dt:.6f},{cells},{resamples}",
                  flush=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="arc-census",
        description="Exact intersection counting for same-radius circular arcs")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_common(sp):
        sp.add_argument("input", nargs="?", default="-",
                        help="arc file (default stdin)")
        sp.add_argument("--report", choices=("text", "json"), default="text")
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("count", help="run the counting pipeline")
    add_common(sp)
    sp.add_argument("--small-k", action="store_true",
                    help="output-sensitive variant with doubling")
    sp.add_argument("--bichromatic", choices=("direct", "identity"),
                    help="count only red-blue crossings")
    sp.add_argument("--threads", type=int, default=1)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("oracle", help="brute-force reference count")
    add_common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("compare", help="pipeline vs oracle; exit 3 on mismatch")
    add_common(sp)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("gen", help="generate a random instance")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--box", type=float, default=4.0)
    sp.add_argument("--span-min", type=float, default=0.1)
    sp.add_argument("--span-max", type=float, default=6.283185307179586)
    sp.add_argument("--red-frac", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--margin", type=float, default=config.DEFAULT_MARGIN)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="timing rows as CSV")
    sp.add_argument("--sizes", required=True, help="comma-separated n values")
    sp.add_argument("--seeds", type=int, default=1)
    sp.add_argument("--algo", choices=("pipeline", "oracle", "smallk"),
                    default="pipeline")
    sp.add_argument("--density", type=float, default=8.0,
                    help="target arcs per unit area")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    config.reload_eps_from_env()
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

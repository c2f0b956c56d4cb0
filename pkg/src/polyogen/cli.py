"""Command-line front end: counting, sampling, enumeration, verification,
benchmarking, and rendering from one entry point.

All numeric output is exact decimal.  Sampling output is byte-deterministic
for a given argument vector: --jobs N derives N independent streams from
(seed, worker index) and samples are gathered back in index order.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import bijection, counting, oracle, polyomino, sampler
from .counting import CountClass
from .rng import SplitMix64, stream_seed

_CLASS_NAMES = {
    "convex": CountClass.CONVEX,
    "directed": CountClass.DIRECTED,
    "parallelogram": CountClass.PARALLELOGRAM,
    "swalk": CountClass.SWALK,
    "self-intersecting-swalk": CountClass.SELF_INTERSECTING_SWALK,
    "weak-directed-swalk": CountClass.WEAK_DIRECTED_SWALK,
}

_ENV_BUDGET = "POLYOGEN_BUDGET"


def _default_budget() -> int:
    return int(os.environ.get(_ENV_BUDGET, 5_000_000))


def _semiperimeter(perimeter: int) -> int:
    if perimeter % 2 or perimeter < 4:
        raise SystemExit(f"error: perimeter must be an even integer >= 4, got {perimeter}")
    return perimeter // 2


def _json_line(data: dict) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _cmd_count(args: argparse.Namespace) -> int:
    cls = _CLASS_NAMES[args.count_class]
    if args.perimeter is not None:
        print(counting.count_perimeter(cls, _semiperimeter(args.perimeter)))
    elif args.width is not None and args.height is not None:
        print(counting.count(cls, args.width, args.height))
    else:
        raise SystemExit("error: pass --width and --height, or --perimeter")
    return 0


def _cmd_moments(args: argparse.Namespace) -> int:
    print(counting.moment(args.order, args.width, args.height))
    return 0


def _sample_one(args: argparse.Namespace, rng: SplitMix64) -> dict:
    if args.count_class == "convex":
        if args.perimeter is not None:
            report = sampler.sample_perimeter(_semiperimeter(args.perimeter), rng)
        else:
            report = sampler.sample_convex(args.width, args.height, rng)
        return {"polyomino": report.polyomino.to_json_dict(),
                "attempts": report.attempts, "seed": report.seed}
    if args.count_class == "directed":
        origin = (0, 0)
        corner = (args.width - 1, args.height - 1)
        seed = rng.seed
        u = sampler.sample_path(origin, corner, rng)
        v = sampler.sample_path(origin, corner, rng)
        if args.trace:
            marks = bijection.untangle_marks(bijection.functions_from_paths(u, v))
            print(f"trace: pair {u.to_text()} {v.to_text()} crossovers at z={marks}",
                  file=sys.stderr)
        poly = bijection.pair_to_directed(u, v, args.width, args.height)
        return {"polyomino": poly.to_json_dict(), "attempts": 1, "seed": seed}
    if args.count_class == "swalk":
        code = sampler.sample_swalk(args.width, args.height, rng)
        return {"code": code.to_text(), "seed": rng.seed}
    raise SystemExit(f"error: cannot sample class {args.count_class!r}")


def _cmd_sample(args: argparse.Namespace) -> int:
    if args.count_class != "convex" and args.perimeter is not None:
        raise SystemExit("error: --perimeter sampling is only for --class convex")
    if args.perimeter is None and (args.width is None or args.height is None):
        raise SystemExit("error: pass --width and --height, or --perimeter")
    if args.format == "svg" and not args.outdir:
        raise SystemExit("error: --format svg requires --outdir")

    streams = [SplitMix64(stream_seed(args.seed, k)) for k in range(args.jobs)]
    results = [_sample_one(args, streams[k % args.jobs]) for k in range(args.n)]

    if args.format == "svg":
        os.makedirs(args.outdir, exist_ok=True)
        for k, res in enumerate(results):
            poly = polyomino.ConvexPolyomino.from_json_dict(res["polyomino"])
            path = os.path.join(args.outdir, f"sample_{k:04d}.svg")
            with open(path, "w", encoding="ascii") as fh:
                fh.write(polyomino.render_svg(poly))
            print(path)
        return 0
    for res in results:
        if args.format == "json":
            print(_json_line(res))
        elif "code" in res:
            print(res["code"])
        else:
            poly = polyomino.ConvexPolyomino.from_json_dict(res["polyomino"])
            print(polyomino.render_ascii(poly))
            print()
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    budget = args.budget or _default_budget()
    if args.count_class == "convex":
        report = oracle.enumerate_convex(args.width, args.height, budget=budget)
        if args.list:
            for poly in report.objects:
                print(_json_line(poly.to_json_dict()))
        else:
            print(report.count)
    elif args.count_class == "swalk":
        report = oracle.enumerate_swalks(args.width, args.height, budget=budget,
                                         keep_objects=args.list)
        if args.list:
            for code in report.objects:
                print(code.to_text())
        else:
            print(report.count)
    else:
        raise SystemExit(f"error: cannot enumerate class {args.count_class!r}")
    return 0


def _verify_rows(max_s: int, budget: int):
    for s in range(2, max_s + 1):
        for w in range(1, s):
            h = s - w
            convex = oracle.enumerate_convex(w, h, budget=budget)
            directed = sum(1 for p in convex.objects if polyomino.flags(p).directed)
            para = sum(1 for p in convex.objects if polyomino.flags(p).parallelogram)
            walks = oracle.enumerate_swalks(w, h, budget=budget)
            yield ("convex", w, h, counting.count(CountClass.CONVEX, w, h), convex.count)
            yield ("directed", w, h, counting.count(CountClass.DIRECTED, w, h), directed)
            yield ("parallelogram", w, h,
                   counting.count(CountClass.PARALLELOGRAM, w, h), para)
            yield ("swalk", w, h, counting.count(CountClass.SWALK, w, h),
                   walks.tallies["total"])
            yield ("self-intersecting-swalk", w, h,
                   2 * counting.count(CountClass.SELF_INTERSECTING_SWALK, w, h),
                   walks.tallies["self_intersecting"])


def _cmd_verify(args: argparse.Namespace) -> int:
    budget = args.budget or _default_budget()
    width = max(len(name) for name in _CLASS_NAMES) + 2
    ok = True
    print(f"{'class':<{width}}{'w':>3}{'h':>3}{'formula':>12}{'oracle':>12}  match")
    for name, w, h, formula, brute in _verify_rows(args.max_semiperimeter, budget):
        match = formula == brute
        ok = ok and match
        print(f"{name:<{width}}{w:>3}{h:>3}{formula:>12}{brute:>12}  {'yes' if match else 'NO'}")
    print("all counts match" if ok else "MISMATCH FOUND")
    return 0 if ok else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    rng = SplitMix64(args.seed)
    if args.perimeter is not None:
        s = _semiperimeter(args.perimeter)
        stats = sampler.efficiency(s=s, trials=args.trials, rng=rng)
        accept = counting.count_perimeter(CountClass.CONVEX, s)
        total = counting.count_perimeter(CountClass.SWALK, s)
        label = f"perimeter {args.perimeter}"
    elif args.width is not None and args.height is not None:
        stats = sampler.efficiency(w=args.width, h=args.height,
                                   trials=args.trials, rng=rng)
        accept = counting.count(CountClass.CONVEX, args.width, args.height)
        total = counting.count(CountClass.SWALK, args.width, args.height)
        label = f"box {args.width}x{args.height}"
    else:
        raise SystemExit("error: pass --width and --height, or --perimeter")
    print(f"exact efficiency   ({label}): {accept}/{total} = {float(stats.exact):.6f}")
    if stats.trials:
        print(f"empirical efficiency over {stats.trials} trials: "
              f"{stats.accepted}/{stats.trials} = {float(stats.empirical):.6f}")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    text = args.json if args.json is not None else sys.stdin.read()
    poly = polyomino.ConvexPolyomino.from_json_dict(json.loads(text))
    out = polyomino.render(poly, args.format)
    print(out, end="" if out.endswith("\n") else "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyogen",
        description="Exact counting and uniform random generation of convex polyominoes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_size(p: argparse.ArgumentParser, perimeter: bool = True) -> None:
        p.add_argument("--width", type=int)
        p.add_argument("--height", type=int)
        if perimeter:
            p.add_argument("--perimeter", type=int,
                           help="full boundary length 2s instead of a fixed box")

    p = sub.add_parser("count", help="print an exact class count")
    p.add_argument("--class", dest="count_class", required=True, choices=_CLASS_NAMES)
    add_size(p)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("moments", help="moments of path-pair common-point counts")
    p.add_argument("--order", type=int, required=True, choices=(1, 2))
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(fn=_cmd_moments)

    p = sub.add_parser("sample", help="draw uniform random objects")
    p.add_argument("--class", dest="count_class", required=True,
                   choices=("convex", "directed", "swalk"))
    add_size(p)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "ascii", "svg"), default="json")
    p.add_argument("--outdir", help="output directory for --format svg")
    p.add_argument("--trace", action="store_true",
                   help="print crossover positions of each directed sample to stderr")
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("enumerate", help="brute-force enumeration")
    p.add_argument("--class", dest="count_class", required=True,
                   choices=("convex", "swalk"))
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print the objects, not the count")
    p.add_argument("--budget", type=int)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="compare every closed form with the oracle")
    p.add_argument("--max-semiperimeter", type=int, default=8)
    p.add_argument("--budget", type=int)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("bench", help="rejection-sampler efficiency, exact and empirical")
    add_size(p)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("render", help="render a polyomino from its JSON form")
    p.add_argument("--json", help="polyomino JSON (default: read stdin)")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.set_defaults(fn=_cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fn: Callable[[argparse.Namespace], int] = args.fn
    try:
        return fn(args)
    except ValueError as exc:  # domain errors, malformed codes, bad JSON
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

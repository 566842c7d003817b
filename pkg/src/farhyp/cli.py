"""Batch command-line front end.

Subcommands: hyp, farpairs, ecc, gen, oracle, stats. All report lines are
``key=value``; histograms are CSV. Output is byte-identical across repeated
runs with the same arguments and seeds.

Exit codes: 0 success, 1 usage error, 2 I/O or data error, 3 interrupted by
the time budget.
"""
from __future__ import annotations

import argparse
import sys
from collections import Counter

from . import eccentricity, farpairs, hyperbolicity, oracle
from .graph import (
    Graph,
    ParseError,
    clique,
    cycle,
    grid,
    grid_with_deletions,
    is_connected,
    largest_biconnected_component,
    parse_edge_list,
    path,
    random_connected,
    write_edge_list,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INTERRUPTED = 3

GEN_HELP = (
    "generator spec 'kind:params[,seed=S]'; kinds: path:K | cycle:K | clique:K | "
    "grid:P,Q | grid-del:P,Q,FRACTION[,seed=S] | random:N,M[,seed=S]"
)


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit code 2 for usage errors; we reserve 2 for I/O
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def parse_generator_spec(spec: str) -> Graph:
    kind, _, rest = spec.partition(":")
    params = [p for p in rest.split(",") if p] if rest else []
    seed = 0
    if params and params[-1].startswith("seed="):
        seed = int(params.pop()[5:])
    try:
        if kind == "path":
            (k,) = map(int, params)
            return path(k)
        if kind == "cycle":
            (k,) = map(int, params)
            return cycle(k)
        if kind == "clique":
            (k,) = map(int, params)
            return clique(k)
        if kind == "grid":
            p, q = map(int, params)
            return grid(p, q)
        if kind == "grid-del":
            p, q, frac = int(params[0]), int(params[1]), float(params[2])
            return grid_with_deletions(p, q, frac, seed)
        if kind == "random":
            n, m = map(int, params)
            return random_connected(n, m, seed)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown generator kind {kind!r}")


def _add_graph_source(p: argparse.ArgumentParser, with_bcc_flag: bool = True) -> None:
    p.add_argument("path", nargs="?",
                   help="edge-list file (two labels per line; '#'/'%%' start comments)")
    p.add_argument("--gen", metavar="SPEC", help=GEN_HELP)
    if with_bcc_flag:
        p.add_argument("--largest-bcc", action="store_true",
                       help="restrict to the largest biconnected component")


def _load(args, need_connected: bool = True):
    """Resolve the graph source; returns (graph, names) after any --largest-bcc."""
    if args.gen and args.path:
        raise UsageError("give either an edge-list file or --gen, not both")
    if args.gen:
        g = parse_generator_spec(args.gen)
        names = [str(i) for i in range(g.n)]
    elif args.path:
        try:
            with open(args.path, "rb") as fh:
                g, names = parse_edge_list(fh.read())
        except OSError as exc:
            raise DataError(f"cannot read {args.path}: {exc}") from exc
        except ParseError as exc:
            raise DataError(f"{args.path}: {exc}") from exc
    else:
        raise UsageError("no graph given: pass an edge-list file or --gen SPEC")
    if getattr(args, "largest_bcc", False):
        try:
            g, orig = largest_biconnected_component(g)
        except ValueError as exc:
            raise DataError(str(exc)) from exc
        names = [names[int(v)] for v in orig]
    elif need_connected and not is_connected(g):
        raise DataError("graph is disconnected; re-run with --largest-bcc")
    return g, names


def _delta_str(delta2: int) -> str:
    return f"{delta2 / 2:.1f}"


def _out_stream(args):
    if getattr(args, "output", None):
        return open(args.output, "w")
    return sys.stdout


# -- subcommands -------------------------------------------------------------

def cmd_hyp(args) -> int:
    args.largest_bcc = False  # hyp does its own component handling below
    g, names = _load(args, need_connected=False)

    opts = hyperbolicity.HyperbolicityOptions(
        cache_capacity=args.cache_size,
        use_heuristic=not args.no_heuristic,
        use_pruning=not args.no_prune,
        time_budget=args.time_budget,
    )

    try:
        if args.all_components:
            from .graph import biconnected_components, induced_subgraph
            blocks = [induced_subgraph(g, b) for b in biconnected_components(g)]
        else:
            blocks = [largest_biconnected_component(g)]
    except ValueError as exc:
        raise DataError(str(exc)) from exc

    best = None
    best_names = None
    for sub, orig in blocks:
        rep = hyperbolicity.run(sub, opts)
        if best is None or rep.delta2 > best.delta2:
            best = rep
            best_names = [names[int(v)] for v in orig]

    rep = best
    if rep.interrupted:
        lo, hi = rep.bracket2
        print(f"delta=[{_delta_str(lo)}, {_delta_str(hi)}]")
        print("interrupted=true")
    else:
        print(f"delta={_delta_str(rep.delta2)}")
    if rep.witness is not None:
        print("witness=" + ",".join(best_names[v] for v in rep.witness))
    if args.stats:
        for key in ("pairs_emitted", "pairs_evaluated", "tuples_tested", "bfs_runs",
                    "cache_hits", "cache_misses", "peak_store_entries",
                    "retained_pairs", "peak_memory_bytes"):
            print(f"{key}={getattr(rep, key)}")
    return EXIT_INTERRUPTED if rep.interrupted else EXIT_OK


def cmd_farpairs(args) -> int:
    if (args.delta is not None or args.plot) and not args.histogram:
        raise UsageError("--delta and --plot require --histogram")
    g, names = _load(args)
    ecc = eccentricity.all_eccentricities(g)
    store = farpairs.FarApartStore(g, ecc)
    out = _out_stream(args)
    try:
        if args.count:
            print(sum(1 for _ in store), file=out)
            return EXIT_OK
        if args.histogram:
            counts = Counter(p.d for p in store)
            threshold = None
            if args.delta is not None:
                threshold = int(round(2 * args.delta))
                print(f"# threshold_distance={threshold}", file=out)
            print("distance,count", file=out)
            for d in sorted(counts):
                print(f"{d},{counts[d]}", file=out)
            if args.plot:
                from .plots import save_histogram_figure
                save_histogram_figure(dict(counts), args.plot, threshold)
            return EXIT_OK
        for p in store:
            print(f"{names[p.u]} {names[p.v]} {p.d}", file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_ecc(args) -> int:
    g, names = _load(args)
    try:
        ecc = eccentricity.all_eccentricities(g)
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    for v in range(g.n):
        print(f"{names[v]} {int(ecc.ecc[v])}")
    print(f"diameter={ecc.diameter}")
    print(f"radius={ecc.radius}")
    return EXIT_OK


def cmd_gen(args) -> int:
    g = parse_generator_spec(args.spec)
    text = write_edge_list(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, names = _load(args)
    if args.what == "hyp":
        try:
            delta2, witness = oracle.brute_hyperbolicity(g, size_limit=args.limit)
        except ValueError as exc:
            raise DataError(str(exc)) from exc
        print(f"delta={_delta_str(delta2)}")
        if witness is not None:
            print("witness=" + ",".join(names[v] for v in witness))
    else:
        pairs = oracle.brute_far_pairs(g)
        for p in sorted(pairs, key=lambda p: (-p.d, p.u, p.v)):
            print(f"{names[p.u]} {names[p.v]} {p.d}")
        print(f"count={len(pairs)}")
    return EXIT_OK


def cmd_stats(args) -> int:
    g, names = _load(args)
    ecc = eccentricity.all_eccentricities(g)
    store = farpairs.FarApartStore(g, ecc)
    counts = Counter(p.d for p in store)
    far_total = sum(counts.values())
    total = g.n * (g.n - 1) // 2
    rep = hyperbolicity.run(g)
    print(f"n={g.n}")
    print(f"m={g.m}")
    print(f"diameter={ecc.diameter}")
    print(f"radius={ecc.radius}")
    print(f"total_pairs={total}")
    print(f"far_pairs={far_total}")
    print(f"far_pairs_pct={100 * far_total / total:.4f}" if total else "far_pairs_pct=0")
    print(f"hyp_pairs={rep.pairs_emitted}")
    print(f"hyp_pairs_pct={100 * rep.pairs_emitted / total:.4f}" if total else "hyp_pairs_pct=0")
    print(f"delta={_delta_str(rep.delta2)}")
    if args.plot:
        from .plots import save_histogram_figure
        save_histogram_figure(dict(counts), args.plot, rep.delta2)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="farhyp",
                     description="Far-apart pair enumeration and Gromov hyperbolicity.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hyp", parents=[], help="compute hyperbolicity "
                       "(default pipeline: load, largest biconnected component, run)")
    _add_graph_source(p, with_bcc_flag=False)
    p.add_argument("--cache-size", type=int, default=1000, metavar="K",
                   help="BFS cache capacity (default 1000)")
    p.add_argument("--no-heuristic", action="store_true", help="skip the initial lower bound")
    p.add_argument("--no-prune", action="store_true", help="use plain instead of pruned BFS")
    p.add_argument("--all-components", action="store_true",
                   help="maximize over every biconnected component")
    p.add_argument("--time-budget", type=float, metavar="SEC",
                   help="stop after SEC seconds and report a [lower, upper] bracket")
    p.add_argument("--stats", action="store_true", help="emit counters")
    p.set_defaults(func=cmd_hyp)

    p = sub.add_parser("farpairs", help="enumerate far-apart pairs by non-increasing distance")
    _add_graph_source(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print only the pair count")
    mode.add_argument("--histogram", action="store_true", help="emit 'distance,count' CSV")
    p.add_argument("--delta", type=float, metavar="D",
                   help="with --histogram: mark the evaluation threshold at distance 2*D")
    p.add_argument("--plot", metavar="PNG",
                   help="with --histogram: also render the histogram figure to a file")
    p.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")
    p.set_defaults(func=cmd_farpairs)

    p = sub.add_parser("ecc", help="print per-vertex eccentricities, diameter and radius")
    _add_graph_source(p)
    p.set_defaults(func=cmd_ecc)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("spec", help=GEN_HELP)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force cross checks (desk scale)")
    p.add_argument("what", choices=["hyp", "farpairs"])
    _add_graph_source(p)
    p.add_argument("--limit", type=int, default=oracle.DEFAULT_SIZE_LIMIT,
                   help="size guard for the brute oracle")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("stats", help="pair-count statistics (far pairs %% and hyp pairs %%)")
    _add_graph_source(p)
    p.add_argument("--plot", metavar="PNG", help="render the distance histogram figure")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Exit codes: 0 success / colouring valid, 1 colouring invalid,
2 bad usage or unreadable input, 3 internal failure or exhausted budget.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

from . import bench as bench_mod
from .coloring import (
    DEFAULT_ESCALATION_CAP,
    run_algorithm,
    theorem_bounds,
)
from .errors import (
    EscalationCapExceeded,
    GraphError,
    InvalidArgs,
    NoTrials,
    ParameterOutOfRange,
    ParseError,
    RadiusTooSmall,
    ResampleBudgetExceeded,
    SearchBudgetExceeded,
    TsrError,
)
from .exact import DEFAULT_NODE_BUDGET, min_strength
from .fileio import (
    format_run_report,
    read_coloring,
    read_graph,
    write_coloring,
    write_graph,
    write_run_report,
)
from .generators import FAMILIES, generate_graph
from .graphs import degree_partition
from .ordering import (
    DEFAULT_MAX_ATTEMPTS,
    chernoff_tail_bound,
    estimate_binomial_tail,
    estimate_event_frequency,
    resample_until_good,
)
from .verify import verify_coloring


def _common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--r", type=int, default=2,
                     help="distinguishing radius (default 2)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsrcolor",
        description="Total colourings whose vertex weights differ on every "
                    "pair within a fixed distance.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gen", help="generate a graph file")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, help="edge probability (gnp)")
    p.add_argument("--d", type=int, help="degree (regular)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = subs.add_parser("color", help="construct a distinguishing colouring")
    p.add_argument("graph", help="graph file")
    _common(p)
    p.add_argument("-o", "--output", help="colouring file to write")
    p.add_argument("--report", help="run-report file to write")
    p.add_argument("--assert", dest="self_check", action="store_true",
                   help="check invariants at every step and verify the result")
    p.add_argument("--escalation-cap", type=int,
                   default=DEFAULT_ESCALATION_CAP)
    p.add_argument("--max-attempts", type=int, default=DEFAULT_MAX_ATTEMPTS)
    p.set_defaults(func=cmd_color)

    p = subs.add_parser("verify", help="check a colouring file")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--r", type=int, default=None,
                   help="override the radius stored in the colouring file")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("exact", help="exhaustive minimum palette size")
    p.add_argument("graph")
    _common(p)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("-o", "--output", help="witness colouring file")
    p.set_defaults(func=cmd_exact)

    p = subs.add_parser("lemma-stats",
                        help="ordering-property violation frequencies")
    p.add_argument("graph")
    _common(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--mc-samples", type=int, default=20_000)
    p.set_defaults(func=cmd_lemma_stats)

    p = subs.add_parser("bench", help="sweep a family, compare palette sizes")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n-list", required=True,
                   help="comma-separated vertex counts")
    p.add_argument("--p", type=float)
    p.add_argument("--d", type=int)
    _common(p)
    p.add_argument("--seeds", type=int, default=1,
                   help="instances per size")
    p.set_defaults(func=cmd_bench)

    return parser


def cmd_gen(args) -> int:
    g = generate_graph(args.family, args.n, p=args.p, d=args.d,
                       seed=args.seed)
    if args.output:
        write_graph(g, args.output)
        print(f"wrote {args.output}: n={g.n} m={g.m} "
              f"max_degree={g.max_degree}")
    else:
        sys.stdout.write(f"{g.n} {g.m}\n")
        for u, v in g.edges:
            sys.stdout.write(f"{u} {v}\n")
    return 0


def _run_report(g, col, wall: float, valid) -> dict:
    new, prior = theorem_bounds(col.params.delta, col.r)
    report = {
        "n": g.n, "m": g.m, "max_degree": g.max_degree,
        "r": col.r, "seed": col.seed,
        "K": col.params.K, "k": col.params.k,
        "palette_cap": col.params.palette_cap,
        "max_color": col.max_color,
        "bound_new": f"{new:.2f}", "bound_prior": prior,
        "escalations": col.escalations,
        "resample_attempts": col.resample_attempts,
        "lemma_violations": col.lemma_violations,
        "backend": col.backend,
        "wall_time_s": f"{wall:.4f}",
    }
    if valid is not None:
        report["valid"] = int(valid)
    return report


def cmd_color(args) -> int:
    g = read_graph(args.graph)
    t0 = time.perf_counter()
    col = run_algorithm(g, args.r, args.seed, check=args.self_check,
                        escalation_cap=args.escalation_cap,
                        max_attempts=args.max_attempts)
    wall = time.perf_counter() - t0
    valid = None
    if args.self_check:
        rep = verify_coloring(g, col.vertex_colors, col.edge_colors, col.r,
                              K=col.params.K, k=col.params.k)
        valid = rep.valid
    report = _run_report(g, col, wall, valid)
    if args.output:
        write_coloring(g, col, args.output)
    if args.report:
        write_run_report(report, args.report)
    else:
        sys.stdout.write(format_run_report(report))
    if valid is False:
        print("error: self-check failed, the colouring is invalid",
              file=sys.stderr)
        return 3
    return 0


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    data = read_coloring(args.coloring, g)
    r = data.r if args.r is None else args.r
    rep = verify_coloring(g, data.vertex_colors, data.edge_colors, r,
                          K=data.K, k=data.k)
    print(f"r={r}")
    print(f"conflicts={rep.conflict_count}")
    print(f"palette_ok={int(rep.palette_ok)}")
    print(f"max_color={rep.max_color}")
    print(f"valid={int(rep.valid)}")
    for u, v in rep.conflicts[:20]:
        print(f"conflict {u} {v}")
    return 0 if rep.valid else 1


def cmd_exact(args) -> int:
    g = read_graph(args.graph)
    q, (vc, ec) = min_strength(g, args.r, node_budget=args.node_budget)
    print(f"min_strength={q}")
    if args.output:
        lines = [f"{g.n} {g.m} {args.r} {q} {q}"]
        lines.extend(f"{v} {c}" for v, c in enumerate(vc))
        lines.extend(f"{u} {v} {c}" for (u, v), c in zip(g.edges, ec))
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0


def cmd_lemma_stats(args) -> int:
    g = read_graph(args.graph)
    freq = estimate_event_frequency(g, args.r, args.trials, args.seed)
    print(f"trials={freq.trials}")
    print(f"tracked={freq.tracked_count}")
    print(f"samples={freq.samples}")
    for fam, count in (("F1", freq.f1), ("F2", freq.f2), ("F3", freq.f3)):
        print(f"{fam}_violations={count} frequency={freq.frequency(fam):.6f}")
    part = degree_partition(g)
    try:
        _, attempts = resample_until_good(g, part, args.r, args.seed)
        print(f"resample_attempts={attempts}")
    except ResampleBudgetExceeded as exc:
        print(f"resample_attempts={exc.attempts} (budget exhausted)")
    print("# Chernoff tail bound vs Monte-Carlo estimate")
    for n in (100, 1000):
        for p in (0.1, 0.5):
            np_ = n * p
            for t in (0.5 * math.sqrt(np_), np_ / 10, np_ / 3):
                bound = chernoff_tail_bound(n, p, t)
                est, se = estimate_binomial_tail(n, p, t, args.mc_samples,
                                                 args.seed)
                print(f"chernoff n={n} p={p} t={t:.3f} bound={bound:.5f} "
                      f"estimate={est:.5f} stderr={se:.5f}")
    return 0


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.n_list.split(",") if s.strip()]
    except ValueError:
        raise InvalidArgs(f"bad --n-list {args.n_list!r}")
    if not sizes:
        raise InvalidArgs("empty --n-list")
    records = bench_mod.run_sweep(args.family, sizes, args.r, args.seeds,
                                  p=args.p, d=args.d, base_seed=args.seed)
    for rec in records:
        sys.stdout.write(bench_mod.format_record(rec))
    sys.stdout.write(bench_mod.format_table(records))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (ParseError, GraphError, ParameterOutOfRange, RadiusTooSmall,
            InvalidArgs, NoTrials, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SearchBudgetExceeded, EscalationCapExceeded,
            ResampleBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except TsrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Compare the compiled kernels against the plain numpy fallback.

Times the three hot kernels in isolation and then a whole colouring run
through each execution path. The compiled path is warmed once before
timing so JIT cost is excluded.

    python3 benchmarks/compare_backends.py --n 20000 --d 16 --seeds 3
"""

import argparse
import sys
import time

import numpy as np

from tsrcolor import generate_graph, run_algorithm
from tsrcolor import _kernels_numpy as knp

try:
    from tsrcolor import _kernels_numba as knb
except ImportError:
    knb = None


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(g, r, repeats):
    n = g.n
    rows = []
    rindptr, rindices = g.r_neighborhoods(r)
    pos = np.arange(n, dtype=np.int64)
    in_i = pos % 3 == 0
    is_big = g.degree.astype(np.int64) ** 3 > int(g.max_degree) ** 2
    weights = np.arange(n, dtype=np.int64) // 2

    cases = [
        ("rneigh_csr",
         lambda m: m.rneigh_csr(g.adj_indptr, g.adj_indices, r)),
        ("backward_counts",
         lambda m: m.backward_counts(rindptr, rindices, pos, in_i)),
        ("backward_big_counts",
         lambda m: m.backward_big_counts(g.adj_indptr, g.adj_indices,
                                         pos, is_big)),
        ("verify_conflicts",
         lambda m: m.verify_conflicts(g.adj_indptr, g.adj_indices, r,
                                      weights, 1000)),
    ]
    for name, call in cases:
        t_np = _time(lambda: call(knp), repeats)
        t_nb = _time(lambda: call(knb), repeats) if knb else float("nan")
        rows.append((name, t_nb, t_np))
    return rows


def bench_runs(g, r, seeds):
    t_nb = t_np = 0.0
    for s in seeds:
        if knb:
            t0 = time.perf_counter()
            run_algorithm(g, r, seed=s)
            t_nb += time.perf_counter() - t0
        t0 = time.perf_counter()
        run_algorithm(g, r, seed=s, force_python=True)
        t_np += time.perf_counter() - t0
    n = len(seeds)
    return [("run_algorithm", t_nb / n if knb else float("nan"), t_np / n)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", default="gnp", choices=["gnp", "regular"])
    ap.add_argument("--n", type=int, default=20000)
    ap.add_argument("--d", type=float, default=16,
                    help="mean degree (gnp) or exact degree (regular)")
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args(argv)

    if args.family == "gnp":
        g = generate_graph("gnp", args.n, p=args.d / (args.n - 1), seed=1)
    else:
        g = generate_graph("regular", args.n, d=int(args.d), seed=1)
    print(f"graph: {args.family} n={g.n} m={g.m} "
          f"max_degree={g.max_degree} r={args.r}")
    if knb is None:
        print("numba unavailable, timing the numpy fallback only")
    else:
        run_algorithm(g, args.r, seed=0)           # JIT warm-up

    rows = bench_kernels(g, args.r, args.repeats)
    rows += bench_runs(g, args.r, list(range(args.seeds)))

    print(f"{'kernel':<22}{'numba (s)':>12}{'numpy (s)':>12}{'speedup':>10}")
    for name, t_nb, t_np in rows:
        ratio = t_np / t_nb if t_nb and t_nb == t_nb else float("nan")
        print(f"{name:<22}{t_nb:>12.4f}{t_np:>12.4f}{ratio:>10.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

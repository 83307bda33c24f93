"""Family sweeps comparing achieved palette size against the guarantees."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import run_algorithm, theorem_bounds
from .generators import generate_graph
from .verify import verify_coloring


@dataclass(frozen=True)
class BenchRecord:
    family: str
    n: int
    m: int
    max_degree: int
    r: int
    seed: int
    K: int
    k: int
    max_color: int
    bound_new: float
    bound_prior: int
    conjecture: int
    escalations: int
    resample_attempts: int
    wall_time_s: float
    valid: bool


def bench_instance(family: str, n: int, r: int, seed: int,
                   p: float | None = None, d: int | None = None) -> BenchRecord:
    g = generate_graph(family, n, p=p, d=d, seed=seed)
    t0 = time.perf_counter()
    col = run_algorithm(g, r, seed)
    wall = time.perf_counter() - t0
    rep = verify_coloring(g, col.vertex_colors, col.edge_colors, r,
                          K=col.params.K, k=col.params.k)
    new, prior = theorem_bounds(col.params.delta, r)
    return BenchRecord(
        family=family, n=g.n, m=g.m, max_degree=g.max_degree, r=r, seed=seed,
        K=col.params.K, k=col.params.k, max_color=col.max_color,
        bound_new=new, bound_prior=prior,
        conjecture=col.params.delta ** (r - 1),
        escalations=col.escalations,
        resample_attempts=col.resample_attempts,
        wall_time_s=wall, valid=rep.valid)


def run_sweep(family: str, sizes, r: int, seeds: int,
              p: float | None = None, d: int | None = None,
              base_seed: int = 0) -> list[BenchRecord]:
    records = []
    for n in sizes:
        for i in range(seeds):
            records.append(bench_instance(family, n, r,
                                          seed=base_seed + 1000 * i,
                                          p=p, d=d))
    return records


def format_record(rec: BenchRecord) -> str:
    return (f"instance family={rec.family} n={rec.n} m={rec.m} "
            f"max_degree={rec.max_degree} r={rec.r} seed={rec.seed} "
            f"K={rec.K} k={rec.k} max_color={rec.max_color} "
            f"escalations={rec.escalations} "
            f"attempts={rec.resample_attempts} "
            f"wall={rec.wall_time_s:.3f}s valid={int(rec.valid)}\n")


def format_table(records) -> str:
    headers = ("family", "n", "delta", "r", "max_color", "bound_new",
               "bound_prior", "conjecture", "esc", "valid")
    rows = [headers]
    for rec in records:
        rows.append((rec.family, str(rec.n), str(rec.max_degree), str(rec.r),
                     str(rec.max_color), f"{rec.bound_new:.1f}",
                     str(rec.bound_prior), str(rec.conjecture),
                     str(rec.escalations), str(int(rec.valid))))
    widths = [max(len(row[i]) for row in rows) for i in range(len(headers))]
    lines = ["  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row))
             for row in rows]
    return "\n".join(lines) + "\n"

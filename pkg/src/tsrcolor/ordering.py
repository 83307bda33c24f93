"""Random vertex orderings and the concentration properties they must satisfy.

Each vertex v draws X_v uniform on [0, 1); processing order is ascending X_v
(ties broken by index, which at float64 resolution never matters). The early
set I holds vertices with X_v below min(1, ln(D) / D^(1/3)) where D is the
maximum degree; R is the rest. For vertices with at least D^(1/3) * ln(D)
Big neighbours ("tracked" vertices) three properties are checked:

  F1: the r-reach into I is at most 2 * d(v) * D^(r-4/3) * ln(D)
  F2 (v in R): at least X_v*b(v) - sqrt(X_v*b(v))*ln(D) Big neighbours
      of v come earlier in the ordering
  F3 (v in R): at most X_v*M + sqrt(X_v*M)*ln(D) of v's r-reach comes
      earlier, where M = (sum of neighbour degrees) * D^(r-2)

A uniformly random ordering satisfies all three with good probability, so
`resample_until_good` simply redraws until a clean ordering appears. The
Chernoff helpers quantify how unlikely each individual failure is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import (
    DegenerateGraph,
    NoTrials,
    ParameterOutOfRange,
    ResampleBudgetExceeded,
)
from .graphs import DegreePartition, Graph, degree_partition

DEFAULT_MAX_ATTEMPTS = 100


@dataclass(frozen=True)
class RandomOrdering:
    """A sampled ordering: x values, the permutation, and the early set."""

    x: np.ndarray          # float64 [n], the raw draws
    perm: np.ndarray       # int64 [n], vertices in processing order
    pos: np.ndarray        # int64 [n], inverse of perm
    in_i: np.ndarray       # bool [n], X_v below the early-set threshold
    threshold: float
    seed: int


@dataclass(frozen=True)
class BackwardStats:
    """Per-vertex counts taken against one ordering at radius r.

    b_minus[v]  Big neighbours of v that precede v
    dr_minus[v] vertices within distance r of v that precede v
    dr_i[v]     vertices within distance r of v that lie in I
    """

    b_minus: np.ndarray
    dr_minus: np.ndarray
    dr_i: np.ndarray
    r: int


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of checking F1-F3 on one ordering."""

    tracked: np.ndarray
    violations: tuple = field(default_factory=tuple)  # (vertex, "F1"|"F2"|"F3")

    @property
    def ok(self) -> bool:
        return not self.violations

    def count(self, family: str) -> int:
        return sum(1 for _, fam in self.violations if fam == family)


@dataclass(frozen=True)
class EventFrequencies:
    """Monte-Carlo violation frequencies over freshly sampled orderings."""

    trials: int
    tracked_count: int
    f1: int
    f2: int
    f3: int

    @property
    def samples(self) -> int:
        return self.trials * self.tracked_count

    @property
    def empty(self) -> bool:
        return self.samples == 0

    def frequency(self, family: str) -> float:
        if self.empty:
            return 0.0
        return {"F1": self.f1, "F2": self.f2, "F3": self.f3}[family] / self.samples


def i_threshold(delta: int) -> float:
    """Early-set cut min(1, ln(delta) / delta^(1/3))."""
    return min(1.0, math.log(delta) / delta ** (1.0 / 3.0))


def f1_limit(d: int, delta: int, r: int) -> float:
    return 2.0 * d * delta ** (r - 4.0 / 3.0) * math.log(delta)


def f2_floor(x: float, b: int, ln_delta: float) -> float:
    mu = x * b
    return mu - math.sqrt(mu) * ln_delta


def f3_limit(x: float, reach_cap: int, ln_delta: float) -> float:
    mu = x * reach_cap
    return mu + math.sqrt(mu) * ln_delta


def _sample(g: Graph, seed: int, delta: int) -> RandomOrdering:
    rng = np.random.default_rng(seed)
    x = rng.random(g.n)
    perm = np.argsort(x, kind="stable").astype(np.int64)
    pos = np.empty(g.n, dtype=np.int64)
    pos[perm] = np.arange(g.n, dtype=np.int64)
    thr = i_threshold(delta)
    return RandomOrdering(x=x, perm=perm, pos=pos, in_i=x < thr,
                          threshold=thr, seed=seed)


def sample_ordering(g: Graph, seed: int) -> RandomOrdering:
    """Draw one ordering. The graph must have max degree >= 2."""
    if seed < 0:
        raise ParameterOutOfRange(f"seed must be >= 0, got {seed}")
    if g.max_degree < 2:
        raise DegenerateGraph(
            f"max degree {g.max_degree} < 2: no room for the randomized "
            "ordering machinery")
    return _sample(g, seed, g.max_degree)


def backward_stats(g: Graph, ordering: RandomOrdering,
                   part: DegreePartition, r: int) -> BackwardStats:
    rindptr, rindices = g.r_neighborhoods(r)
    dr_minus, dr_i = kernels.backward_counts(
        rindptr, rindices, ordering.pos, ordering.in_i)
    b_minus = kernels.backward_big_counts(
        g.adj_indptr, g.adj_indices, ordering.pos, part.is_big)
    return BackwardStats(b_minus=np.asarray(b_minus),
                         dr_minus=np.asarray(dr_minus),
                         dr_i=np.asarray(dr_i), r=r)


def tracked_vertices(g: Graph, part: DegreePartition) -> np.ndarray:
    """Vertices subject to the F-checks: b(v) >= delta^(1/3) * ln(delta)."""
    delta = max(2, g.max_degree)
    cut = delta ** (1.0 / 3.0) * math.log(delta)
    return np.nonzero(part.big_neighbors >= cut)[0].astype(np.int64)


def check_lemma_properties(g: Graph, ordering: RandomOrdering,
                           part: DegreePartition,
                           stats: BackwardStats) -> LemmaReport:
    delta = max(2, g.max_degree)
    ln_d = math.log(delta)
    r = stats.r
    tracked = tracked_vertices(g, part)
    violations = []
    for v in tracked:
        v = int(v)
        if stats.dr_i[v] > f1_limit(int(g.degree[v]), delta, r):
            violations.append((v, "F1"))
        if not ordering.in_i[v]:
            x = float(ordering.x[v])
            if stats.b_minus[v] < f2_floor(x, int(part.big_neighbors[v]), ln_d):
                violations.append((v, "F2"))
            cap = int(g.neighbor_degree_sum[v]) * delta ** (r - 2)
            if stats.dr_minus[v] > f3_limit(x, cap, ln_d):
                violations.append((v, "F3"))
    return LemmaReport(tracked=tracked, violations=tuple(violations))


def resample_until_good(g: Graph, part: DegreePartition, r: int, seed: int,
                        max_attempts: int = DEFAULT_MAX_ATTEMPTS):
    """Redraw orderings (seeds seed, seed+1, ...) until F1-F3 all hold.

    Returns (ordering, attempts). After max_attempts failures raises
    ResampleBudgetExceeded carrying the last report and the ordering with
    the fewest violations, so a caller may proceed with it deliberately.
    """
    if max_attempts < 1:
        raise ParameterOutOfRange(
            f"max_attempts must be >= 1, got {max_attempts}")
    best = None
    report = None
    for i in range(max_attempts):
        ordering = sample_ordering(g, seed + i)
        stats = backward_stats(g, ordering, part, r)
        report = check_lemma_properties(g, ordering, part, stats)
        if report.ok:
            return ordering, i + 1
        if best is None or len(report.violations) < len(best[1].violations):
            best = (ordering, report)
    raise ResampleBudgetExceeded(
        f"no ordering satisfied F1-F3 in {max_attempts} attempts "
        f"({len(report.violations)} violations on the last)",
        last_report=report, best_ordering=best[0], best_report=best[1],
        attempts=max_attempts)


def chernoff_tail_bound(n: int, p: float, t: float) -> float:
    """Upper bound exp(-t^2 / (3np)) on Pr[BIN(n, p) > np + t], 0 <= t <= np."""
    if n < 1:
        raise ParameterOutOfRange(f"n must be >= 1, got {n}")
    if not 0.0 < p <= 1.0:
        raise ParameterOutOfRange(f"p must be in (0, 1], got {p}")
    if not 0.0 <= t <= n * p:
        raise ParameterOutOfRange(f"t must be in [0, np] = [0, {n * p}], got {t}")
    return math.exp(-(t * t) / (3.0 * n * p))


def estimate_binomial_tail(n: int, p: float, t: float, samples: int,
                           seed: int) -> tuple[float, float]:
    """Monte-Carlo estimate of Pr[BIN(n, p) > np + t] with its standard error."""
    if samples < 1:
        raise NoTrials(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    hits = rng.binomial(n, p, size=samples) > n * p + t
    freq = float(hits.mean())
    stderr = math.sqrt(freq * (1.0 - freq) / samples)
    return freq, stderr


def estimate_event_frequency(g: Graph, r: int, trials: int,
                             seed: int) -> EventFrequencies:
    """Sample `trials` fresh orderings and tally F1/F2/F3 violations.

    The denominator for frequencies is trials * |tracked|; trial i uses
    seed + i, so trials could be farmed out and merged.
    """
    if trials < 1:
        raise NoTrials(f"trials must be >= 1, got {trials}")
    part = degree_partition(g)
    counts = {"F1": 0, "F2": 0, "F3": 0}
    tracked_count = 0
    for i in range(trials):
        ordering = sample_ordering(g, seed + i)
        stats = backward_stats(g, ordering, part, r)
        report = check_lemma_properties(g, ordering, part, stats)
        tracked_count = report.tracked.size
        for _, fam in report.violations:
            counts[fam] += 1
    return EventFrequencies(trials=trials, tracked_count=tracked_count,
                            f1=counts["F1"], f2=counts["F2"], f3=counts["F3"])

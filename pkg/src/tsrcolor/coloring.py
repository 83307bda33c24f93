"""Greedy construction of r-distance sum-distinguishing total colourings.

Setup: every vertex starts at colour 1, every edge at colour K+1, so vertex
v's running weight is 1 + d(v)*(K+1). Vertices are processed in a sampled
order (see `ordering`). Each vertex picks the smallest *final* weight that
(a) lies in the currently achievable window and (b) differs from the final
weight of every already-processed vertex within distance r, then realises
it by shifting incident edge colours:

  * forward edge to an unprocessed u: shift up by at most K when v is Small
    and u is Big, else by at most k (never down);
  * backward edge to a processed u: shift within +-K if u is Big, +-k if u
    is Small, and additionally keep u's running weight in
    [final(u) - K, final(u)] so u's own colour can absorb the difference.

Every window contains 0, so clamping the remaining difference through the
windows one edge at a time always realises a target inside the feasible
interval. After the pass each vertex colour becomes 1 + (final - running),
which lands in [1, K+1]; edge colours stay in [1, 2K+k+1].

K = delta^(r-1) + k and k = ceil(delta^(r-4/3) * ln^2(delta)) leave enough
headroom that a target is available whenever the ordering's backward reach
behaves; if some vertex still runs out, k is doubled and the pass restarts
with the same ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import kernels
from .errors import (
    EscalationCapExceeded,
    InfeasibleTarget,
    ParameterOutOfRange,
    RadiusTooSmall,
    ResampleBudgetExceeded,
)
from .graphs import DegreePartition, Graph, degree_partition
from .ordering import (
    DEFAULT_MAX_ATTEMPTS,
    RandomOrdering,
    _sample,
    resample_until_good,
)

import numpy as np

DEFAULT_ESCALATION_CAP = 10
# auto mode caches r-neighbourhoods up to this many int32 entries (~600 MB)
RNEIGH_AUTO_BUDGET = 150_000_000
# committed weights must stay clear of int64 overflow
WEIGHT_SAFE_LIMIT = 2 ** 62


@dataclass(frozen=True)
class Params:
    """Palette parameters for one (delta, r) pair."""

    delta: int
    r: int
    k: int
    K: int

    @property
    def palette_cap(self) -> int:
        return 2 * self.K + self.k + 1

    @property
    def vertex_cap(self) -> int:
        return self.K + 1


class DeltaInterval(NamedTuple):
    """Closed integer window of allowed colour shifts (always contains 0)."""

    lo: int
    hi: int


class SumInterval(NamedTuple):
    """Closed interval of final weights reachable for a vertex."""

    lo: int
    hi: int


@dataclass(frozen=True)
class AuditRecord:
    """How much room a vertex had when it was about to be coloured."""

    options: int    # size of the feasible weight window
    forbidden: int  # processed vertices within distance r
    case: str       # "B", "S+B" (Small with a Big neighbour) or "S"

    @property
    def margin(self) -> int:
        return self.options - self.forbidden


@dataclass
class ColoringState:
    """Mutable colouring-in-progress. All arrays are int64."""

    g: Graph
    params: Params
    vertex_colors: np.ndarray
    edge_colors: np.ndarray
    w_running: np.ndarray   # weight under the current colours
    w_final: np.ndarray     # committed final weight (processed vertices)
    processed: np.ndarray


@dataclass(frozen=True)
class TotalColoring:
    """A finished colouring plus how it was obtained."""

    vertex_colors: np.ndarray
    edge_colors: np.ndarray
    params: Params
    r: int
    seed: int
    escalations: int
    resample_attempts: int
    lemma_violations: int
    backend: str

    @property
    def max_color(self) -> int:
        mv = int(self.vertex_colors.max()) if self.vertex_colors.size else 0
        me = int(self.edge_colors.max()) if self.edge_colors.size else 0
        return max(mv, me)


def _k_value(delta: int, r: int) -> int:
    return math.ceil(delta ** (r - 4.0 / 3.0) * math.log(delta) ** 2)


def derive_params(delta: int, r: int) -> Params:
    """Palette parameters: k = ceil(delta^(r-4/3) ln^2 delta), K = delta^(r-1) + k."""
    if r < 2:
        raise RadiusTooSmall(f"radius must be >= 2, got {r}")
    if delta < 2:
        raise ParameterOutOfRange(f"delta must be >= 2, got {delta}")
    k = _k_value(delta, r)
    return Params(delta=delta, r=r, k=k, K=delta ** (r - 1) + k)


def theorem_bounds(delta: int, r: int) -> tuple[float, int]:
    """(guaranteed palette size 2*delta^(r-1) + 3*delta^(r-4/3)*ln^2(delta) + 4,
    previous best 3*delta^(r-1))."""
    if r < 2:
        raise RadiusTooSmall(f"radius must be >= 2, got {r}")
    if delta < 2:
        raise ParameterOutOfRange(f"delta must be >= 2, got {delta}")
    new = (2.0 * delta ** (r - 1)
           + 3.0 * delta ** (r - 4.0 / 3.0) * math.log(delta) ** 2 + 4.0)
    return new, 3 * delta ** (r - 1)


def init_state(g: Graph, params: Params) -> ColoringState:
    vertex_colors = np.ones(g.n, dtype=np.int64)
    edge_colors = np.full(g.m, params.K + 1, dtype=np.int64)
    w_running = 1 + g.degree * np.int64(params.K + 1)
    return ColoringState(
        g=g, params=params,
        vertex_colors=vertex_colors, edge_colors=edge_colors,
        w_running=w_running.astype(np.int64),
        w_final=np.zeros(g.n, dtype=np.int64),
        processed=np.zeros(g.n, dtype=bool))


def edge_delta_interval(state: ColoringState, part: DegreePartition,
                        v: int, u: int) -> DeltaInterval:
    """Allowed shift window for edge {v, u} while v is being coloured."""
    K, k = state.params.K, state.params.k
    if state.processed[u]:
        slack = int(state.w_final[u] - state.w_running[u])
        step = K if part.is_big[u] else k
        return DeltaInterval(max(slack - K, -step), min(slack, step))
    hi = K if (not part.is_big[v]) and part.is_big[u] else k
    return DeltaInterval(0, hi)


def _incident_windows(state: ColoringState, part: DegreePartition, v: int):
    # backward edges first, each half by ascending neighbour index
    order = []
    for u in state.g.neighbors(v):
        if state.processed[u]:
            order.append(int(u))
    for u in state.g.neighbors(v):
        if not state.processed[u]:
            order.append(int(u))
    return [(u, edge_delta_interval(state, part, v, u)) for u in order]


def feasible_sum_interval(state: ColoringState, part: DegreePartition,
                          v: int) -> SumInterval:
    """Final weights reachable for v by shifting its incident edges."""
    lo = hi = int(state.w_running[v])
    for _, win in _incident_windows(state, part, v):
        lo += win.lo
        hi += win.hi
    return SumInterval(lo, hi)


def choose_target(feasible: SumInterval, forbidden) -> int | None:
    """Smallest value in the interval not in `forbidden`, or None."""
    t = feasible.lo
    for f in sorted(forbidden):
        if f < t:
            continue
        if f == t:
            t += 1
        else:
            break
    return t if t <= feasible.hi else None


def apply_target(state: ColoringState, part: DegreePartition,
                 v: int, target: int) -> None:
    """Shift v's incident edges so its weight reaches `target`, commit v.

    The remaining difference is clamped through the edge windows in the
    same backward-then-forward order used everywhere; since each window
    contains 0 this lands exactly for any target in the feasible interval.
    """
    if state.processed[v]:
        raise InfeasibleTarget(f"vertex {v} is already coloured")
    windows = _incident_windows(state, part, v)
    feas = feasible_sum_interval(state, part, v)
    if not feas.lo <= target <= feas.hi:
        raise InfeasibleTarget(
            f"target {target} outside feasible interval {feas} for vertex {v}")
    rem = target - int(state.w_running[v])
    for u, win in windows:
        d = min(max(rem, win.lo), win.hi)
        if d:
            eid = state.g.edge_index(v, u)
            state.edge_colors[eid] += d
            state.w_running[v] += d
            state.w_running[u] += d
        rem -= d
    assert rem == 0 and state.w_running[v] == target
    state.w_final[v] = target
    state.processed[v] = True


def availability_audit(state: ColoringState, part: DegreePartition,
                       v: int) -> AuditRecord:
    """Room at v just before colouring it: window size vs processed r-reach."""
    feas = feasible_sum_interval(state, part, v)
    rindptr, rindices = state.g.r_neighborhoods(state.params.r)
    reach = rindices[rindptr[v]:rindptr[v + 1]]
    forbidden = int(state.processed[reach].sum())
    if part.is_big[v]:
        case = "B"
    elif part.big_neighbors[v] > 0:
        case = "S+B"
    else:
        case = "S"
    return AuditRecord(options=feas.hi - feas.lo + 1,
                       forbidden=forbidden, case=case)


def finalize_vertex_colors(state: ColoringState) -> None:
    """Fold each vertex's leftover slack into its own colour."""
    slack = state.w_final - state.w_running
    assert (slack >= 0).all() and (slack <= state.params.K).all()
    state.vertex_colors += slack
    state.w_running += slack


def _python_pass(g: Graph, params: Params, part: DegreePartition,
                 ordering: RandomOrdering, use_rcache: bool, check: bool):
    """Step-by-step pass built from the public ops. Mirrors the fused kernel."""
    state = init_state(g, params)
    if use_rcache:
        rindptr, rindices = g.r_neighborhoods(params.r)
    for v in ordering.perm:
        v = int(v)
        if g.degree[v] == 0:
            state.w_final[v] = state.w_running[v]
            state.processed[v] = True
            continue
        if use_rcache:
            reach = rindices[rindptr[v]:rindptr[v + 1]]
        else:
            reach = kernels.truncated_bfs(g.adj_indptr, g.adj_indices,
                                          v, params.r)
        forbidden = state.w_final[np.asarray(reach)[state.processed[reach]]]
        feas = feasible_sum_interval(state, part, v)
        target = choose_target(feas, forbidden.tolist())
        if target is None:
            return None, v
        apply_target(state, part, v, target)
        if check:
            assert state.w_running[v] == target
            cols = state.edge_colors[g.incident_edge_ids(v)]
            assert cols.min() >= 1 and cols.max() <= params.palette_cap
            for u in g.neighbors(v):
                if state.processed[u] and u != v:
                    s = int(state.w_final[u] - state.w_running[u])
                    assert 0 <= s <= params.K
    finalize_vertex_colors(state)
    return state, -1


def _estimate_rneigh_entries(g: Graph, r: int) -> int:
    # a rough cap is enough here, so float arithmetic is fine
    per_vertex = np.minimum(
        float(max(0, g.n - 1)),
        g.neighbor_degree_sum * float(max(1, g.max_degree)) ** (r - 2))
    return int(per_vertex.sum())


def run_algorithm(g: Graph, r: int, seed: int, *,
                  max_attempts: int = DEFAULT_MAX_ATTEMPTS,
                  escalation_cap: int = DEFAULT_ESCALATION_CAP,
                  check: bool = False,
                  use_rcache: bool | None = None,
                  force_python: bool = False) -> TotalColoring:
    """Colour g so all vertex pairs within distance r get distinct weights.

    Draws orderings until F1-F3 hold (falling back to the least-bad ordering
    if the budget runs out), then runs the greedy pass, doubling k after any
    pass that strands a vertex, up to `escalation_cap` times.

    use_rcache: True caches all r-neighbourhoods (memory up to
    sum_v min(n-1, D(v)*delta^(r-2)) int32 entries), False re-walks them per
    vertex, None picks by that estimate. check=True re-verifies the running
    invariants at every step. force_python bypasses the fused kernel.
    """
    if r < 2:
        raise RadiusTooSmall(f"radius must be >= 2, got {r}")
    if seed < 0:
        raise ParameterOutOfRange(f"seed must be >= 0, got {seed}")
    if escalation_cap < 0:
        raise ParameterOutOfRange(
            f"escalation_cap must be >= 0, got {escalation_cap}")

    delta_eff = max(2, g.max_degree)
    part = degree_partition(g)

    if g.max_degree >= 2:
        try:
            ordering, attempts = resample_until_good(
                g, part, r, seed, max_attempts=max_attempts)
            violations = 0
        except ResampleBudgetExceeded as exc:
            # deliberate: continue with the least-bad ordering, on record
            ordering = exc.best_ordering
            attempts = exc.attempts
            violations = len(exc.best_report.violations)
    else:
        ordering = _sample(g, seed, delta_eff)
        attempts = 1
        violations = 0

    if use_rcache is None:
        use_rcache = _estimate_rneigh_entries(g, r) <= RNEIGH_AUTO_BUDGET

    base = derive_params(delta_eff, r)
    use_kernel = kernels.USING_NUMBA and not force_python
    backend = "numba" if use_kernel else "python-ops"
    dummy_ptr = np.zeros(1, dtype=np.int64)
    dummy_idx = np.zeros(0, dtype=np.int32)

    for esc in range(escalation_cap + 1):
        k = base.k << esc
        params = Params(delta=delta_eff, r=r, k=k, K=delta_eff ** (r - 1) + k)
        if (delta_eff + 1) * params.palette_cap >= WEIGHT_SAFE_LIMIT:
            raise ParameterOutOfRange(
                "palette too large for exact int64 weights "
                f"(delta={delta_eff}, r={r}, k={k})")
        if use_kernel:
            if use_rcache:
                rindptr, rindices = g.r_neighborhoods(r)
            else:
                rindptr, rindices = dummy_ptr, dummy_idx
            status, fail_v, ct_v, ct_e, _ = kernels.color_pass(
                g.adj_indptr, g.adj_indices, g.adj_edge_ids, g.m,
                rindptr, rindices, use_rcache, r,
                ordering.perm, part.is_big, params.K, params.k, check)
            if status == 0:
                return TotalColoring(
                    vertex_colors=ct_v, edge_colors=ct_e, params=params,
                    r=r, seed=seed, escalations=esc,
                    resample_attempts=attempts, lemma_violations=violations,
                    backend=backend)
            if status == 2:
                raise AssertionError(
                    f"colouring invariant breached at vertex {fail_v}")
        else:
            state, fail_v = _python_pass(
                g, params, part, ordering, use_rcache, check)
            if state is not None:
                return TotalColoring(
                    vertex_colors=state.vertex_colors,
                    edge_colors=state.edge_colors, params=params,
                    r=r, seed=seed, escalations=esc,
                    resample_attempts=attempts, lemma_violations=violations,
                    backend=backend)
    raise EscalationCapExceeded(
        f"vertex {fail_v} still had no feasible weight after "
        f"{escalation_cap} palette doublings")

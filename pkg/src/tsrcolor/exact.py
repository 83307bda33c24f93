"""Exact minimum palette size by exhaustive search.

Only meant for small graphs: the state space is q^(n+m). Elements are
assigned in the order (edges from 0 to its higher neighbours, vertex 0,
edges from 1 to its higher neighbours, vertex 1, ...), so by the time a
vertex is assigned, all its incident edges already have colours and its
weight is final. That allows pruning against every earlier vertex within
distance r immediately.
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterOutOfRange, RadiusTooSmall, SearchBudgetExceeded
from .graphs import Graph, r_neighborhood

DEFAULT_NODE_BUDGET = 100_000_000


class _Search:
    __slots__ = ("g", "q", "elements", "back_reach", "vertex_colors",
                 "edge_colors", "weights", "nodes", "budget")

    def __init__(self, g: Graph, r: int, q: int, budget: int):
        self.g = g
        self.q = q
        self.budget = budget
        self.nodes = 0
        # ("e", edge_id) and ("v", v) in completion order
        self.elements = []
        for v in range(g.n):
            for j in range(g.adj_indptr[v], g.adj_indptr[v + 1]):
                if g.adj_indices[j] > v:
                    self.elements.append(("e", int(g.adj_edge_ids[j])))
            self.elements.append(("v", v))
        # earlier vertices within distance r, per vertex
        self.back_reach = [
            [int(u) for u in r_neighborhood(g, v, r) if u < v]
            for v in range(g.n)
        ]
        self.vertex_colors = np.zeros(g.n, dtype=np.int64)
        self.edge_colors = np.zeros(g.m, dtype=np.int64)
        self.weights = np.zeros(g.n, dtype=np.int64)

    def run(self) -> bool:
        return self._extend(0)

    def _extend(self, i: int) -> bool:
        if i == len(self.elements):
            return True
        kind, idx = self.elements[i]
        for c in range(1, self.q + 1):
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(
                    f"exact search exceeded {self.budget} nodes")
            if kind == "e":
                self.edge_colors[idx] = c
                if self._extend(i + 1):
                    return True
            else:
                v = idx
                w = c + self.edge_colors[self.g.incident_edge_ids(v)].sum()
                ok = True
                for u in self.back_reach[v]:
                    if self.weights[u] == w:
                        ok = False
                        break
                if ok:
                    self.vertex_colors[v] = c
                    self.weights[v] = w
                    if self._extend(i + 1):
                        return True
        if kind == "e":
            self.edge_colors[idx] = 0
        else:
            self.vertex_colors[idx] = 0
            self.weights[idx] = 0
        return False


def is_colorable(g: Graph, r: int, q: int,
                 node_budget: int = DEFAULT_NODE_BUDGET):
    """Can all weights within distance r be distinguished with colours 1..q?

    Returns (True, (vertex_colors, edge_colors)) or (False, None). Raises
    SearchBudgetExceeded when the search was cut short, which proves
    nothing either way.
    """
    if r < 1:
        raise RadiusTooSmall(f"radius must be >= 1, got {r}")
    if q < 1:
        raise ParameterOutOfRange(f"palette size must be >= 1, got {q}")
    if node_budget < 1:
        raise ParameterOutOfRange(f"node budget must be >= 1, got {node_budget}")
    search = _Search(g, r, q, node_budget)
    if search.run():
        return True, (search.vertex_colors.copy(), search.edge_colors.copy())
    return False, None


def min_strength(g: Graph, r: int, node_budget: int = DEFAULT_NODE_BUDGET):
    """Smallest q admitting a distinguishing colouring, with a witness.

    Returns (q, (vertex_colors, edge_colors)). The budget is shared across
    the whole sweep.
    """
    if g.n == 0:
        return 0, (np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
    remaining = node_budget
    q = 1
    while True:
        search = _Search(g, r, q, remaining)
        try:
            found = search.run()
        finally:
            remaining -= search.nodes
        if found:
            return q, (search.vertex_colors.copy(), search.edge_colors.copy())
        if remaining < 1:
            raise SearchBudgetExceeded(
                f"exact search exceeded {node_budget} nodes before q={q + 1}")
        q += 1

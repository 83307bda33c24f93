"""Graph container and degree-based vertex partition.

Graphs are simple and undirected, vertices 0..n-1. Adjacency is CSR with
rows sorted ascending; `adj_edge_ids` aligns each CSR slot with the index
of its edge in `edges`, so edge colours can be stored per edge and reached
from either endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    DuplicateEdge,
    LoopEdge,
    ParameterOutOfRange,
    RadiusTooSmall,
    VertexOutOfRange,
)

# degree_partition compares d^3 with max_degree^2 in int64
MAX_PARTITION_DEGREE = 2_000_000


class Graph:
    """Immutable simple undirected graph with CSR adjacency."""

    __slots__ = (
        "n", "m", "edges", "degree", "max_degree",
        "adj_indptr", "adj_indices", "adj_edge_ids",
        "neighbor_degree_sum", "_rneigh_cache", "_edge_index",
    )

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise ParameterOutOfRange(f"vertex count must be >= 0, got {n}")
        edges = np.array(edges, dtype=np.int64).reshape(-1, 2)
        m = edges.shape[0]

        if m:
            if edges.min() < 0 or edges.max() >= n:
                bad = edges[(edges < 0).any(axis=1) | (edges >= n).any(axis=1)][0]
                raise VertexOutOfRange(
                    f"edge ({bad[0]}, {bad[1]}) has an endpoint outside [0, {n})")
            loops = edges[:, 0] == edges[:, 1]
            if loops.any():
                v = int(edges[loops.argmax(), 0])
                raise LoopEdge(f"edge ({v}, {v}) joins a vertex to itself")
            a = np.minimum(edges[:, 0], edges[:, 1])
            b = np.maximum(edges[:, 0], edges[:, 1])
            keys = a * np.int64(n) + b
            order = np.argsort(keys, kind="stable")
            dup = np.nonzero(np.diff(keys[order]) == 0)[0]
            if dup.size:
                i = order[dup[0]]
                raise DuplicateEdge(
                    f"edge ({edges[i, 0]}, {edges[i, 1]}) appears more than once")

        self.n = int(n)
        self.m = int(m)
        self.edges = edges
        self.edges.setflags(write=False)

        heads = np.concatenate([edges[:, 0], edges[:, 1]])
        tails = np.concatenate([edges[:, 1], edges[:, 0]])
        eids = np.concatenate([np.arange(m, dtype=np.int64)] * 2) \
            if m else np.empty(0, dtype=np.int64)
        perm = np.lexsort((tails, heads))
        self.adj_indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(heads, minlength=n), out=self.adj_indptr[1:])
        self.adj_indices = tails[perm]
        self.adj_edge_ids = eids[perm]
        self.degree = np.diff(self.adj_indptr)
        self.max_degree = int(self.degree.max()) if n else 0

        owner = np.repeat(np.arange(n, dtype=np.int64), self.degree)
        dsum = np.zeros(n, dtype=np.int64)
        np.add.at(dsum, owner, self.degree[self.adj_indices])
        self.neighbor_degree_sum = dsum

        self._rneigh_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        self._edge_index: dict[tuple[int, int], int] | None = None

    def neighbors(self, v: int) -> np.ndarray:
        return self.adj_indices[self.adj_indptr[v]:self.adj_indptr[v + 1]]

    def incident_edge_ids(self, v: int) -> np.ndarray:
        return self.adj_edge_ids[self.adj_indptr[v]:self.adj_indptr[v + 1]]

    def edge_index(self, u: int, v: int) -> int:
        """Index into `edges` of the edge {u, v}; KeyError if absent."""
        if self._edge_index is None:
            self._edge_index = {
                (int(min(a, b)), int(max(a, b))): i
                for i, (a, b) in enumerate(self.edges)
            }
        return self._edge_index[(min(u, v), max(u, v))]

    def r_neighborhoods(self, r: int) -> tuple[np.ndarray, np.ndarray]:
        """CSR over all vertices of {u : 1 <= dist(u, v) <= r}, cached per r.

        Row contents are int32 and sorted. Memory is linear in the total
        neighbourhood size (at most sum over v of d(v) * max_degree^(r-1)).
        """
        if r < 1:
            raise RadiusTooSmall(f"radius must be >= 1, got {r}")
        cached = self._rneigh_cache.get(r)
        if cached is None:
            cached = kernels.rneigh_csr(self.adj_indptr, self.adj_indices, r)
            self._rneigh_cache[r] = cached
        return cached

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


@dataclass(frozen=True)
class DegreePartition:
    """Small/Big vertex split at degree max_degree^(2/3).

    is_big[v] tests d(v)^3 > max_degree^2 so the cut is exact in integers.
    small_neighbors / big_neighbors count each vertex's neighbours by class.
    """

    is_big: np.ndarray
    small_neighbors: np.ndarray
    big_neighbors: np.ndarray

    @property
    def is_small(self) -> np.ndarray:
        return ~self.is_big


def build_graph(n: int, edges) -> Graph:
    """Validated Graph from an (m, 2) edge array. Rejects loops, duplicate
    pairs (in either orientation) and endpoints outside [0, n)."""
    return Graph(n, edges)


def degree_partition(g: Graph) -> DegreePartition:
    if g.max_degree > MAX_PARTITION_DEGREE:
        raise ParameterOutOfRange(
            f"degree partition supports max degree {MAX_PARTITION_DEGREE}")
    d = g.degree
    cut = np.int64(g.max_degree) ** 2
    is_big = d * d * d > cut
    owner = np.repeat(np.arange(g.n, dtype=np.int64), d)
    big_n = np.bincount(owner[is_big[g.adj_indices]], minlength=g.n)
    small_n = d - big_n
    return DegreePartition(is_big=is_big,
                           small_neighbors=small_n.astype(np.int64),
                           big_neighbors=big_n.astype(np.int64))


def r_neighborhood(g: Graph, v: int, r: int) -> np.ndarray:
    """Sorted vertices u != v with dist(u, v) <= r."""
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside [0, {g.n})")
    if r < 1:
        raise RadiusTooSmall(f"radius must be >= 1, got {r}")
    return np.asarray(
        kernels.truncated_bfs(g.adj_indptr, g.adj_indices, v, r),
        dtype=np.int64)


def dr_upper_bounds(g: Graph, v: int, r: int) -> tuple[int, int]:
    """Bounds on the r-reach |N^r(v)|: (sum-of-neighbour-degrees form,
    degree form). The first never exceeds the second."""
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside [0, {g.n})")
    if r < 2:
        raise RadiusTooSmall(f"these bounds need radius >= 2, got {r}")
    delta = g.max_degree
    tight = int(g.neighbor_degree_sum[v]) * delta ** (r - 2)
    loose = int(g.degree[v]) * delta ** (r - 1)
    return tight, loose

"""Deterministic graph families and seeded random generators."""

from __future__ import annotations

import numpy as np

from .errors import ParameterOutOfRange
from .graphs import Graph, build_graph

FAMILIES = ("path", "cycle", "complete", "star", "gnp", "regular")


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterOutOfRange(f"path needs n >= 1, got {n}")
    i = np.arange(n - 1, dtype=np.int64)
    return build_graph(n, np.column_stack([i, i + 1]))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterOutOfRange(f"cycle needs n >= 3, got {n}")
    i = np.arange(n, dtype=np.int64)
    return build_graph(n, np.column_stack([i, (i + 1) % n]))


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterOutOfRange(f"complete graph needs n >= 1, got {n}")
    u, v = np.triu_indices(n, k=1)
    return build_graph(n, np.column_stack([u, v]).astype(np.int64))


def star(n: int) -> Graph:
    """Hub 0 joined to vertices 1..n-1."""
    if n < 1:
        raise ParameterOutOfRange(f"star needs n >= 1, got {n}")
    leaves = np.arange(1, n, dtype=np.int64)
    return build_graph(n, np.column_stack([np.zeros(n - 1, np.int64), leaves]))


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) by geometric jumps over the pair list.

    Runs in O(n + m) draws rather than O(n^2), so sparse graphs on 10^5+
    vertices are cheap.
    """
    if n < 0:
        raise ParameterOutOfRange(f"gnp needs n >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterOutOfRange(f"gnp needs p in [0, 1], got {p}")
    if p == 1.0:
        return complete(n) if n else build_graph(0, [])
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        return build_graph(n, np.empty((0, 2), dtype=np.int64))
    rng = np.random.default_rng(seed)
    blocks = []
    pos = -1
    block = max(1024, int(total * p * 1.1) + 16)
    while pos < total:
        gaps = rng.geometric(p, size=block)
        idx = pos + np.cumsum(gaps)
        pos = int(idx[-1])
        blocks.append(idx[idx < total])
    lin = np.concatenate(blocks)
    # pair (u, v), u < v, has linear index v*(v-1)/2 + u
    v = ((1.0 + np.sqrt(8.0 * lin + 1.0)) / 2.0).astype(np.int64)
    for _ in range(2):
        v[v * (v - 1) // 2 > lin] -= 1
        v[(v + 1) * v // 2 <= lin] += 1
    u = lin - v * (v - 1) // 2
    assert (u >= 0).all() and (u < v).all()
    return build_graph(n, np.column_stack([u, v]))


def regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular graph via stub pairing with collision repair.

    Bad pairs (loops, repeats) throw their stubs back and the leftover pool
    is re-paired; if the pool ever deadlocks the whole attempt restarts.
    """
    if n < 1:
        raise ParameterOutOfRange(f"regular needs n >= 1, got {n}")
    if not 0 <= d < n:
        raise ParameterOutOfRange(f"regular needs 0 <= d < n, got d={d}")
    if (n * d) % 2:
        raise ParameterOutOfRange(f"n*d must be even, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    while True:
        edges = _try_pairing(n, d, rng)
        if edges is not None:
            return build_graph(n, edges)


def _try_pairing(n: int, d: int, rng) -> np.ndarray | None:
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    edge_set = set()
    while stubs.size:
        rng.shuffle(stubs)
        leftover = []
        progress = False
        for u, v in zip(stubs[0::2].tolist(), stubs[1::2].tolist()):
            if u > v:
                u, v = v, u
            if u == v or (u, v) in edge_set:
                leftover.append(u)
                leftover.append(v)
            else:
                edge_set.add((u, v))
                progress = True
        if not progress:
            uniq = sorted(set(leftover))
            if not any((uniq[i], uniq[j]) not in edge_set
                       for i in range(len(uniq))
                       for j in range(i + 1, len(uniq))):
                return None
        stubs = np.array(leftover, dtype=np.int64)
    edges = np.array(sorted(edge_set), dtype=np.int64).reshape(-1, 2)
    return edges


def generate_graph(family: str, n: int, p: float | None = None,
                   d: int | None = None, seed: int = 0) -> Graph:
    """Dispatch by family name; gnp needs p, regular needs d."""
    if family == "path":
        return path(n)
    if family == "cycle":
        return cycle(n)
    if family == "complete":
        return complete(n)
    if family == "star":
        return star(n)
    if family == "gnp":
        if p is None:
            raise ParameterOutOfRange("gnp needs p")
        return gnp(n, p, seed)
    if family == "regular":
        if d is None:
            raise ParameterOutOfRange("regular needs d")
        return regular(n, d, seed)
    raise ParameterOutOfRange(
        f"unknown family {family!r}, expected one of {FAMILIES}")

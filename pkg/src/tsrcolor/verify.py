"""Independent validation of a finished total colouring.

Everything here recomputes from raw inputs: weights from the colour arrays
and adjacency, distances by a fresh BFS sweep. None of the colouring
module's cached state is consulted, so a bug there cannot hide from this
module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ParameterOutOfRange, RadiusTooSmall
from .graphs import Graph

DEFAULT_MAX_REPORTED = 1000


@dataclass(frozen=True)
class VerifyReport:
    r: int
    conflict_count: int
    conflicts: np.ndarray   # up to max_reported pairs (u, v), u < v
    palette_ok: bool
    max_color: int
    weight_range: tuple[int, int]

    @property
    def valid(self) -> bool:
        return self.conflict_count == 0 and self.palette_ok


def _check_arrays(g: Graph, vertex_colors, edge_colors):
    vc = np.asarray(vertex_colors, dtype=np.int64)
    ec = np.asarray(edge_colors, dtype=np.int64)
    if vc.shape != (g.n,):
        raise ParameterOutOfRange(
            f"expected {g.n} vertex colours, got shape {vc.shape}")
    if ec.shape != (g.m,):
        raise ParameterOutOfRange(
            f"expected {g.m} edge colours, got shape {ec.shape}")
    return vc, ec


def all_vertex_weights(g: Graph, vertex_colors, edge_colors) -> np.ndarray:
    """w(v) = colour(v) + sum of colours of edges at v, for every vertex."""
    vc, ec = _check_arrays(g, vertex_colors, edge_colors)
    w = vc.copy()
    if g.m:
        np.add.at(w, g.edges[:, 0], ec)
        np.add.at(w, g.edges[:, 1], ec)
    return w


def vertex_weight(g: Graph, vertex_colors, edge_colors, v: int) -> int:
    if not 0 <= v < g.n:
        raise ParameterOutOfRange(f"vertex {v} outside [0, {g.n})")
    vc, ec = _check_arrays(g, vertex_colors, edge_colors)
    return int(vc[v] + ec[g.incident_edge_ids(v)].sum())


def find_conflicts(g: Graph, vertex_colors, edge_colors, r: int,
                   max_reported: int = DEFAULT_MAX_REPORTED):
    """(pairs, total): vertex pairs within distance r sharing a weight.

    `pairs` holds at most max_reported of them, sorted; `total` counts all.
    """
    if r < 1:
        raise RadiusTooSmall(f"radius must be >= 1, got {r}")
    w = all_vertex_weights(g, vertex_colors, edge_colors)
    pairs, total = kernels.verify_conflicts(
        g.adj_indptr, g.adj_indices, r, w, max_reported)
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if pairs.size:
        pairs = pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))]
    return pairs, int(total)


def check_palette(g: Graph, vertex_colors, edge_colors, K: int, k: int) -> bool:
    """Vertex colours in [1, K+1] and edge colours in [1, 2K+k+1]?"""
    vc, ec = _check_arrays(g, vertex_colors, edge_colors)
    ok = True
    if g.n:
        ok = ok and 1 <= int(vc.min()) and int(vc.max()) <= K + 1
    if g.m:
        ok = ok and 1 <= int(ec.min()) and int(ec.max()) <= 2 * K + k + 1
    return bool(ok)


def verify_coloring(g: Graph, vertex_colors, edge_colors, r: int,
                    K: int | None = None, k: int | None = None,
                    max_reported: int = DEFAULT_MAX_REPORTED) -> VerifyReport:
    """Full check: no weight collisions within distance r, palette in range.

    With K or k omitted the palette check only requires colours >= 1.
    """
    vc, ec = _check_arrays(g, vertex_colors, edge_colors)
    pairs, total = find_conflicts(g, vc, ec, r, max_reported)
    if K is not None and k is not None:
        palette_ok = check_palette(g, vc, ec, K, k)
    else:
        lows = [int(vc.min())] if g.n else []
        if g.m:
            lows.append(int(ec.min()))
        palette_ok = all(low >= 1 for low in lows)
    w = all_vertex_weights(g, vc, ec)
    mv = int(vc.max()) if g.n else 0
    me = int(ec.max()) if g.m else 0
    wrange = (int(w.min()), int(w.max())) if g.n else (0, 0)
    return VerifyReport(r=r, conflict_count=total, conflicts=pairs,
                        palette_ok=palette_ok, max_color=max(mv, me),
                        weight_range=wrange)

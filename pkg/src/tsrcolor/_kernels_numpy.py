"""Pure-numpy kernel implementations.

These mirror the numba kernels in `_kernels_numba` one for one and are used
when that module is unavailable or disabled via TSRCOLOR_NO_NUMBA=1.
Vertex-local work is vectorised; the outer loops stay in Python, which is
fine at test scale but noticeably slower on large instances.

All kernels take CSR adjacency: `indptr` (int64, n+1) and `indices`
(int64, 2m), with neighbour lists sorted ascending.
"""

from __future__ import annotations

import numpy as np


def _gather_neighbors(indptr, indices, frontier):
    # concatenate the CSR rows of every frontier vertex without a Python loop
    counts = indptr[frontier + 1] - indptr[frontier]
    total = int(counts.sum())
    if total == 0:
        return indices[:0]
    offsets = np.repeat(np.cumsum(counts) - counts, counts)
    flat = np.repeat(indptr[frontier], counts) + (np.arange(total) - offsets)
    return indices[flat]


def truncated_bfs(indptr, indices, src, r):
    """Vertices at distance 1..r from src, sorted ascending."""
    n = indptr.size - 1
    seen = np.zeros(n, dtype=bool)
    seen[src] = True
    frontier = indices[indptr[src]:indptr[src + 1]]
    frontier = frontier[~seen[frontier]]
    out = []
    for _ in range(r):
        if frontier.size == 0:
            break
        seen[frontier] = True
        out.append(frontier)
        nxt = _gather_neighbors(indptr, indices, frontier)
        if nxt.size:
            nxt = np.unique(nxt)
            frontier = nxt[~seen[nxt]]
        else:
            frontier = nxt
    if not out:
        return np.empty(0, dtype=np.int64)
    return np.sort(np.concatenate(out)).astype(np.int64)


def rneigh_csr(indptr, indices, r):
    """CSR of r-neighbourhoods: row v lists all u != v with dist(u, v) <= r.

    Returns (rindptr int64[n+1], rindices int32[total]), each row sorted.
    """
    n = indptr.size - 1
    rows = []
    rindptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        row = truncated_bfs(indptr, indices, v, r)
        rows.append(row.astype(np.int32))
        rindptr[v + 1] = rindptr[v] + row.size
    if rows:
        rindices = np.concatenate(rows) if rindptr[-1] else np.empty(0, np.int32)
    else:
        rindices = np.empty(0, dtype=np.int32)
    return rindptr, rindices


def backward_counts(rindptr, rindices, pos, in_i):
    """Per-vertex counts over the r-neighbourhood rows.

    dr_minus[v] = #{u in row v : pos[u] < pos[v]}
    dr_i[v]     = #{u in row v : in_i[u]}
    """
    n = rindptr.size - 1
    counts = np.diff(rindptr)
    owner = np.repeat(np.arange(n, dtype=np.int64), counts)
    u = rindices.astype(np.int64)
    dr_minus = np.bincount(owner[pos[u] < pos[owner]], minlength=n)
    dr_i = np.bincount(owner[in_i[u]], minlength=n)
    return dr_minus.astype(np.int64), dr_i.astype(np.int64)


def backward_big_counts(indptr, indices, pos, is_big):
    """b_minus[v] = number of Big neighbours of v that precede v."""
    n = indptr.size - 1
    counts = np.diff(indptr)
    owner = np.repeat(np.arange(n, dtype=np.int64), counts)
    u = indices
    mask = is_big[u] & (pos[u] < pos[owner])
    return np.bincount(owner[mask], minlength=n).astype(np.int64)


def verify_conflicts(indptr, indices, r, weights, max_pairs):
    """All pairs (u, v), u < v, dist(u, v) <= r, weights equal.

    Independent of `rneigh_csr`: a fresh stamped BFS per vertex, comparing
    weights on the fly. Collection stops once max_pairs conflicts are
    recorded (the count keeps running). Returns (pairs int64[k, 2], total).
    """
    n = indptr.size - 1
    seen = np.zeros(n, dtype=bool)
    pairs = []
    total = 0
    for v in range(n):
        seen[v] = True
        frontier = indices[indptr[v]:indptr[v + 1]]
        frontier = frontier[~seen[frontier]]
        touched = [np.array([v])]
        wv = weights[v]
        for _ in range(r):
            if frontier.size == 0:
                break
            seen[frontier] = True
            touched.append(frontier)
            hits = frontier[(frontier > v) & (weights[frontier] == wv)]
            total += hits.size
            for u in hits:
                if len(pairs) < max_pairs:
                    pairs.append((v, int(u)))
            nxt = _gather_neighbors(indptr, indices, frontier)
            if nxt.size:
                nxt = np.unique(nxt)
                frontier = nxt[~seen[nxt]]
            else:
                frontier = nxt
        seen[np.concatenate(touched)] = False
    out = np.array(pairs, dtype=np.int64).reshape(len(pairs), 2)
    return out, total

"""Numba kernel implementations.

Hot loops for r-neighbourhood enumeration, ordering statistics, conflict
scanning and the sequential colouring pass. CSR layout matches
`_kernels_numpy`: indptr int64[n+1], indices int64[2m] sorted per row,
edge_ids int64[2m] aligned with indices.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def truncated_bfs(indptr, indices, src, r):
    n = indptr.size - 1
    stamp = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    stamp[src] = src
    queue[0] = src
    lo = 0
    hi = 1
    for _level in range(r):
        nxt = hi
        for qi in range(lo, hi):
            u = queue[qi]
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if stamp[w] != src:
                    stamp[w] = src
                    queue[nxt] = w
                    nxt += 1
        lo = hi
        hi = nxt
        if lo == hi:
            break
    out = queue[1:hi].copy()
    out.sort()
    return out


@njit(cache=True)
def rneigh_csr(indptr, indices, r):
    n = indptr.size - 1
    stamp = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    rindptr = np.empty(n + 1, np.int64)
    rindptr[0] = 0
    cap = indices.size if indices.size > 16 else 16
    out = np.empty(cap, np.int32)
    size = 0
    for v in range(n):
        stamp[v] = v
        queue[0] = v
        lo = 0
        hi = 1
        for _level in range(r):
            nxt = hi
            for qi in range(lo, hi):
                u = queue[qi]
                for j in range(indptr[u], indptr[u + 1]):
                    w = indices[j]
                    if stamp[w] != v:
                        stamp[w] = v
                        queue[nxt] = w
                        nxt += 1
            lo = hi
            hi = nxt
            if lo == hi:
                break
        count = hi - 1
        while size + count > cap:
            cap *= 2
            bigger = np.empty(cap, np.int32)
            bigger[:size] = out[:size]
            out = bigger
        seg = queue[1:hi].copy()
        seg.sort()
        for i in range(count):
            out[size + i] = np.int32(seg[i])
        size += count
        rindptr[v + 1] = size
    return rindptr, out[:size].copy()


@njit(cache=True)
def backward_counts(rindptr, rindices, pos, in_i):
    n = rindptr.size - 1
    dr_minus = np.zeros(n, np.int64)
    dr_i = np.zeros(n, np.int64)
    for v in range(n):
        pv = pos[v]
        back = 0
        ini = 0
        for j in range(rindptr[v], rindptr[v + 1]):
            u = rindices[j]
            if pos[u] < pv:
                back += 1
            if in_i[u]:
                ini += 1
        dr_minus[v] = back
        dr_i[v] = ini
    return dr_minus, dr_i


@njit(cache=True)
def backward_big_counts(indptr, indices, pos, is_big):
    n = indptr.size - 1
    b_minus = np.zeros(n, np.int64)
    for v in range(n):
        pv = pos[v]
        c = 0
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if is_big[u] and pos[u] < pv:
                c += 1
        b_minus[v] = c
    return b_minus


@njit(cache=True)
def verify_conflicts(indptr, indices, r, weights, max_pairs):
    n = indptr.size - 1
    stamp = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    cap = 64
    pairs = np.empty((cap, 2), np.int64)
    size = 0
    total = 0
    for v in range(n):
        stamp[v] = v
        queue[0] = v
        lo = 0
        hi = 1
        wv = weights[v]
        for _level in range(r):
            nxt = hi
            for qi in range(lo, hi):
                u = queue[qi]
                for j in range(indptr[u], indptr[u + 1]):
                    w = indices[j]
                    if stamp[w] != v:
                        stamp[w] = v
                        queue[nxt] = w
                        nxt += 1
                        if w > v and weights[w] == wv:
                            total += 1
                            if size < max_pairs:
                                if size == cap:
                                    cap *= 2
                                    bigger = np.empty((cap, 2), np.int64)
                                    bigger[:size] = pairs[:size]
                                    pairs = bigger
                                pairs[size, 0] = v
                                pairs[size, 1] = w
                                size += 1
            lo = hi
            hi = nxt
            if lo == hi:
                break
    return pairs[:size].copy(), total


@njit(cache=True)
def color_pass(indptr, indices, edge_ids, m, rindptr, rindices, use_rcache, r,
               order, is_big, K, k, check):
    """One greedy colouring pass over the whole ordering.

    Edge colours start at K+1, vertex colours at 1. Each vertex in turn
    picks the smallest achievable total weight that no already-processed
    vertex within distance r holds, and realises it by shifting incident
    edge colours within their allowed windows (forward edges only upward,
    backward edges without driving the neighbour's committed weight above
    its final one or below final-minus-K). Final vertex colours absorb the
    leftover slack.

    Returns (status, fail_vertex, vertex_colors, edge_colors, final_weights)
    with status 0 = done, 1 = no target available at fail_vertex,
    2 = internal invariant breached at fail_vertex (only when check=True).
    """
    n = indptr.size - 1
    palette_cap = 2 * K + k + 1
    ct_v = np.ones(n, np.int64)
    ct_e = np.full(m, K + 1, np.int64)
    w_ct = np.empty(n, np.int64)
    for v in range(n):
        w_ct[v] = 1 + (indptr[v + 1] - indptr[v]) * (K + 1)
    w_f = np.zeros(n, np.int64)
    done = np.zeros(n, np.bool_)

    maxdeg = 0
    for v in range(n):
        d = indptr[v + 1] - indptr[v]
        if d > maxdeg:
            maxdeg = d
    e_lo = np.empty(maxdeg, np.int64)
    e_hi = np.empty(maxdeg, np.int64)
    e_id = np.empty(maxdeg, np.int64)
    e_u = np.empty(maxdeg, np.int64)
    forb = np.empty(n, np.int64)
    stamp = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)

    for step in range(n):
        v = order[step]
        deg = indptr[v + 1] - indptr[v]
        if deg == 0:
            w_f[v] = w_ct[v]
            done[v] = True
            continue

        # incident edge windows: backward edges first, both halves by
        # ascending neighbour (CSR rows are sorted, so two sweeps suffice)
        cnt = 0
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if done[u]:
                s_u = w_f[u] - w_ct[u]
                stp = K if is_big[u] else k
                lo = s_u - K
                if lo < -stp:
                    lo = -stp
                hi = s_u
                if hi > stp:
                    hi = stp
                e_lo[cnt] = lo
                e_hi[cnt] = hi
                e_id[cnt] = edge_ids[j]
                e_u[cnt] = u
                cnt += 1
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if not done[u]:
                hi = K if (not is_big[v]) and is_big[u] else k
                e_lo[cnt] = 0
                e_hi[cnt] = hi
                e_id[cnt] = edge_ids[j]
                e_u[cnt] = u
                cnt += 1

        lo_sum = 0
        hi_sum = 0
        for i in range(cnt):
            lo_sum += e_lo[i]
            hi_sum += e_hi[i]
        t_lo = w_ct[v] + lo_sum
        t_hi = w_ct[v] + hi_sum

        # weights already fixed within distance r
        fc = 0
        if use_rcache:
            for j in range(rindptr[v], rindptr[v + 1]):
                u = rindices[j]
                if done[u]:
                    forb[fc] = w_f[u]
                    fc += 1
        else:
            stamp[v] = v
            queue[0] = v
            qlo = 0
            qhi = 1
            for _level in range(r):
                nxt = qhi
                for qi in range(qlo, qhi):
                    uu = queue[qi]
                    for j in range(indptr[uu], indptr[uu + 1]):
                        w = indices[j]
                        if stamp[w] != v:
                            stamp[w] = v
                            queue[nxt] = w
                            nxt += 1
                            if done[w]:
                                forb[fc] = w_f[w]
                                fc += 1
                qlo = qhi
                qhi = nxt
                if qlo == qhi:
                    break

        sub = forb[:fc]
        sub.sort()
        t = t_lo
        for i in range(fc):
            fw = sub[i]
            if fw < t:
                continue
            if fw == t:
                t += 1
            else:
                break
        if t > t_hi:
            return 1, v, ct_v, ct_e, w_f

        # realise the target: clamp the remainder through each window in
        # turn; every window contains 0, so this always lands exactly
        rem = t - w_ct[v]
        for i in range(cnt):
            d = rem
            if d < e_lo[i]:
                d = e_lo[i]
            if d > e_hi[i]:
                d = e_hi[i]
            if d != 0:
                ct_e[e_id[i]] += d
                w_ct[v] += d
                w_ct[e_u[i]] += d
            rem -= d
        w_f[v] = t
        done[v] = True

        if check:
            if rem != 0 or w_ct[v] != t:
                return 2, v, ct_v, ct_e, w_f
            for i in range(cnt):
                ce = ct_e[e_id[i]]
                if ce < 1 or ce > palette_cap:
                    return 2, v, ct_v, ct_e, w_f
                u = e_u[i]
                if done[u]:
                    s_u = w_f[u] - w_ct[u]
                    if s_u < 0 or s_u > K:
                        return 2, v, ct_v, ct_e, w_f
            acc = ct_v[v]
            for j in range(indptr[v], indptr[v + 1]):
                acc += ct_e[edge_ids[j]]
            if acc != w_ct[v]:
                return 2, v, ct_v, ct_e, w_f

    for v in range(n):
        s = w_f[v] - w_ct[v]
        if check and (s < 0 or s > K):
            return 2, v, ct_v, ct_e, w_f
        ct_v[v] = 1 + s
    return 0, -1, ct_v, ct_e, w_f

"""Both kernel backends must agree exactly, and match brute-force oracles."""

import numpy as np
import pytest

from tsrcolor import _kernels_numpy as knp
from tsrcolor import build_graph, gnp, regular, run_algorithm

from conftest import distance_matrix

knb = pytest.importorskip("tsrcolor._kernels_numba")


def _cases():
    yield build_graph(1, [])
    yield build_graph(5, [])
    yield build_graph(6, [[0, 1], [2, 3]])
    yield gnp(30, 0.15, seed=3)
    yield gnp(60, 0.08, seed=4)
    yield regular(40, 6, seed=5)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_rneigh_csr_backends_agree(r):
    for g in _cases():
        pa, ia = knb.rneigh_csr(g.adj_indptr, g.adj_indices, r)
        pb, ib = knp.rneigh_csr(g.adj_indptr, g.adj_indices, r)
        assert np.array_equal(pa, pb)
        assert np.array_equal(ia, ib)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_truncated_bfs_backends_agree(r):
    for g in _cases():
        for v in range(g.n):
            a = knb.truncated_bfs(g.adj_indptr, g.adj_indices, v, r)
            b = knp.truncated_bfs(g.adj_indptr, g.adj_indices, v, r)
            assert np.array_equal(np.asarray(a), np.asarray(b))


def test_backward_counts_backends_and_brute():
    rng = np.random.default_rng(0)
    for g in _cases():
        if g.n == 0:
            continue
        r = 2
        rindptr, rindices = g.r_neighborhoods(r)
        pos = rng.permutation(g.n).astype(np.int64)
        in_i = rng.random(g.n) < 0.4
        a_minus, a_i = knb.backward_counts(rindptr, rindices, pos, in_i)
        b_minus, b_i = knp.backward_counts(rindptr, rindices, pos, in_i)
        assert np.array_equal(a_minus, b_minus)
        assert np.array_equal(a_i, b_i)
        dist = distance_matrix(g)
        for v in range(g.n):
            reach = [u for u in range(g.n)
                     if u != v and dist[v, u] <= r]
            assert a_minus[v] == sum(pos[u] < pos[v] for u in reach)
            assert a_i[v] == sum(bool(in_i[u]) for u in reach)


def test_backward_big_counts_backends_and_brute():
    rng = np.random.default_rng(1)
    for g in _cases():
        if g.n == 0:
            continue
        pos = rng.permutation(g.n).astype(np.int64)
        is_big = rng.random(g.n) < 0.5
        a = knb.backward_big_counts(g.adj_indptr, g.adj_indices, pos, is_big)
        b = knp.backward_big_counts(g.adj_indptr, g.adj_indices, pos, is_big)
        assert np.array_equal(a, b)
        for v in range(g.n):
            expect = sum(bool(is_big[u]) and pos[u] < pos[v]
                         for u in g.neighbors(v))
            assert a[v] == expect


@pytest.mark.parametrize("r", [1, 2, 3])
def test_verify_conflicts_backends_and_brute(r):
    rng = np.random.default_rng(2)
    for g in _cases():
        if g.n == 0:
            continue
        # few distinct weights so collisions are plentiful
        w = rng.integers(0, max(2, g.n // 3), size=g.n).astype(np.int64)
        pa, ta = knb.verify_conflicts(g.adj_indptr, g.adj_indices, r, w, 10 ** 6)
        pb, tb = knp.verify_conflicts(g.adj_indptr, g.adj_indices, r, w, 10 ** 6)
        seta = {tuple(row) for row in np.asarray(pa).reshape(-1, 2)}
        setb = {tuple(row) for row in np.asarray(pb).reshape(-1, 2)}
        assert ta == tb == len(seta) and seta == setb
        dist = distance_matrix(g)
        brute = {(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                 if dist[u, v] <= r and w[u] == w[v]}
        assert seta == brute


def test_verify_conflicts_respects_pair_cap():
    g = build_graph(4, [[0, 1], [1, 2], [2, 3], [3, 0]])
    w = np.zeros(4, dtype=np.int64)
    pairs, total = knb.verify_conflicts(g.adj_indptr, g.adj_indices, 2, w, 2)
    assert total == 6 and len(pairs) == 2


@pytest.mark.parametrize("use_rcache", [True, False])
def test_color_pass_matches_python_ops(use_rcache):
    for seed, g in enumerate(_cases()):
        for r in (2, 3):
            a = run_algorithm(g, r, seed=seed, check=True,
                              use_rcache=use_rcache)
            b = run_algorithm(g, r, seed=seed, check=True,
                              use_rcache=use_rcache, force_python=True)
            assert a.backend == "numba" and b.backend == "python-ops"
            assert np.array_equal(a.vertex_colors, b.vertex_colors)
            assert np.array_equal(a.edge_colors, b.edge_colors)
            assert a.escalations == b.escalations


def test_rcache_and_streaming_identical():
    g = gnp(80, 0.1, seed=9)
    a = run_algorithm(g, 2, seed=1, use_rcache=True)
    b = run_algorithm(g, 2, seed=1, use_rcache=False)
    assert np.array_equal(a.vertex_colors, b.vertex_colors)
    assert np.array_equal(a.edge_colors, b.edge_colors)

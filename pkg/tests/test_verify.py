import numpy as np
import pytest

from tsrcolor import (
    ParameterOutOfRange,
    all_vertex_weights,
    build_graph,
    check_palette,
    cycle,
    find_conflicts,
    gnp,
    run_algorithm,
    verify_coloring,
    vertex_weight,
)


def test_vertex_weight_p3():
    g = build_graph(3, [[0, 1], [1, 2]])
    vc = np.array([1, 2, 1])
    ec = np.array([4, 5])
    assert vertex_weight(g, vc, ec, 0) == 5
    assert vertex_weight(g, vc, ec, 1) == 11
    assert vertex_weight(g, vc, ec, 2) == 6
    assert all_vertex_weights(g, vc, ec).tolist() == [5, 11, 6]


def test_all_weights_match_per_vertex(small_random_graphs):
    rng = np.random.default_rng(0)
    for g in small_random_graphs:
        vc = rng.integers(1, 9, g.n)
        ec = rng.integers(1, 9, g.m)
        w = all_vertex_weights(g, vc, ec)
        for v in range(g.n):
            assert w[v] == vertex_weight(g, vc, ec, v)


def test_find_conflicts_radius_semantics():
    # all-ones colouring of a path: the two endpoints tie at weight 2,
    # visible at radius 2 but not at radius 1
    g = build_graph(3, [[0, 1], [1, 2]])
    ones_v = np.ones(3, dtype=np.int64)
    ones_e = np.ones(2, dtype=np.int64)
    pairs, total = find_conflicts(g, ones_v, ones_e, 1)
    assert total == 0 and pairs.size == 0
    pairs, total = find_conflicts(g, ones_v, ones_e, 2)
    assert total == 1
    assert pairs.tolist() == [[0, 2]]


def test_find_conflicts_counts_everything_but_reports_capped():
    g = cycle(4)
    pairs, total = find_conflicts(g, np.ones(4, int), np.ones(4, int), 2,
                                  max_reported=3)
    assert total == 6  # every pair of C4 lies within distance 2
    assert len(pairs) == 3


def test_check_palette_ranges():
    g = build_graph(2, [[0, 1]])
    assert check_palette(g, [1, 4], [8], K=3, k=1)
    assert not check_palette(g, [1, 5], [8], K=3, k=1)   # vertex above K+1
    assert not check_palette(g, [1, 4], [9], K=3, k=1)   # edge above 2K+k+1
    assert not check_palette(g, [0, 4], [8], K=3, k=1)   # colours start at 1


def test_verify_report_on_real_run():
    g = gnp(70, 0.1, seed=5)
    col = run_algorithm(g, 2, seed=1)
    rep = verify_coloring(g, col.vertex_colors, col.edge_colors, 2,
                          K=col.params.K, k=col.params.k)
    assert rep.valid and rep.conflict_count == 0 and rep.palette_ok
    assert rep.max_color == col.max_color
    w = all_vertex_weights(g, col.vertex_colors, col.edge_colors)
    assert rep.weight_range == (int(w.min()), int(w.max()))


def test_verify_catches_corruption():
    g = cycle(6)
    col = run_algorithm(g, 2, seed=0)
    vc = col.vertex_colors.copy()
    ec = col.edge_colors.copy()
    # force two vertices at distance <= 2 onto the same weight
    w = all_vertex_weights(g, vc, ec)
    vc[1] += int(w[0] - w[1])
    rep = verify_coloring(g, vc, ec, 2, K=col.params.K, k=col.params.k)
    assert rep.conflict_count >= 1
    assert not rep.valid


def test_verify_without_palette_params():
    g = build_graph(2, [[0, 1]])
    rep = verify_coloring(g, [1, 2], [1], 2)
    assert rep.valid
    rep = verify_coloring(g, [0, 2], [1], 2)  # colour 0 is never allowed
    assert not rep.palette_ok and not rep.valid


def test_verify_shape_validation():
    g = build_graph(3, [[0, 1], [1, 2]])
    with pytest.raises(ParameterOutOfRange):
        verify_coloring(g, [1, 1], [1, 1], 2)
    with pytest.raises(ParameterOutOfRange):
        verify_coloring(g, [1, 1, 1], [1], 2)
    with pytest.raises(ParameterOutOfRange):
        vertex_weight(g, [1, 1, 1], [1, 1], 5)

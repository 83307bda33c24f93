import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tsrcolor import (
    DuplicateEdge,
    LoopEdge,
    ParameterOutOfRange,
    RadiusTooSmall,
    VertexOutOfRange,
    build_graph,
    complete,
    degree_partition,
    dr_upper_bounds,
    gnp,
    r_neighborhood,
    star,
)

from conftest import brute_r_neighborhood, distance_matrix


def test_build_rejects_loop():
    with pytest.raises(LoopEdge):
        build_graph(3, [[0, 1], [2, 2]])


def test_build_rejects_duplicate_same_orientation():
    with pytest.raises(DuplicateEdge):
        build_graph(3, [[0, 1], [0, 1]])


def test_build_rejects_duplicate_flipped():
    with pytest.raises(DuplicateEdge):
        build_graph(3, [[0, 1], [1, 0]])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexOutOfRange):
        build_graph(3, [[0, 3]])
    with pytest.raises(VertexOutOfRange):
        build_graph(3, [[-1, 2]])


def test_build_rejects_negative_n():
    with pytest.raises(ParameterOutOfRange):
        build_graph(-1, [])


def test_empty_and_edgeless():
    g = build_graph(0, [])
    assert g.n == 0 and g.m == 0 and g.max_degree == 0
    g = build_graph(4, [])
    assert g.degree.tolist() == [0, 0, 0, 0]


def test_csr_structure_p4():
    g = build_graph(4, [[0, 1], [1, 2], [2, 3]])
    assert g.adj_indptr.tolist() == [0, 1, 3, 5, 6]
    assert g.adj_indices.tolist() == [1, 0, 2, 1, 3, 2]
    assert g.neighbors(1).tolist() == [0, 2]
    # every CSR slot points back to an edge containing its row vertex
    for v in range(g.n):
        for u, eid in zip(g.neighbors(v), g.incident_edge_ids(v)):
            assert {v, int(u)} == set(g.edges[eid].tolist())


def test_edge_index_lookup():
    g = build_graph(4, [[2, 3], [0, 1]])
    assert g.edge_index(0, 1) == 1
    assert g.edge_index(3, 2) == 0
    with pytest.raises(KeyError):
        g.edge_index(0, 2)


def test_degrees_star():
    g = star(6)
    assert g.max_degree == 5
    assert g.degree.tolist() == [5, 1, 1, 1, 1, 1]
    assert g.neighbor_degree_sum.tolist() == [5, 5, 5, 5, 5, 5]


def test_degree_partition_star():
    g = star(10)  # hub degree 9, leaves degree 1
    part = degree_partition(g)
    # 9^3 > 9^2 so the hub is Big; 1 <= 81 keeps leaves Small
    assert part.is_big.tolist() == [True] + [False] * 9
    assert part.big_neighbors.tolist() == [0] + [1] * 9
    assert part.small_neighbors.tolist() == [9] + [0] * 9


def test_degree_partition_regular_graphs_all_big():
    # d = max_degree always lands Big: d^3 > d^2 for d >= 2
    g = complete(5)
    part = degree_partition(g)
    assert part.is_big.all()
    assert (part.big_neighbors == 4).all()


def test_degree_partition_cut_is_exact():
    # one vertex of degree 4 among max degree 8: 64 <= 64 is Small
    edges = [[0, i] for i in range(1, 9)] + [[9, i] for i in range(1, 5)]
    g = build_graph(10, edges)
    assert g.max_degree == 8
    part = degree_partition(g)
    assert not part.is_big[9]  # 4^3 == 8^2 exactly, stays Small
    assert part.is_big[0]


def test_r_neighborhood_path():
    g = build_graph(5, [[0, 1], [1, 2], [2, 3], [3, 4]])
    assert r_neighborhood(g, 0, 1).tolist() == [1]
    assert r_neighborhood(g, 0, 2).tolist() == [1, 2]
    assert r_neighborhood(g, 2, 2).tolist() == [0, 1, 3, 4]
    assert r_neighborhood(g, 2, 10).tolist() == [0, 1, 3, 4]


def test_r_neighborhood_validation():
    g = build_graph(3, [[0, 1]])
    with pytest.raises(VertexOutOfRange):
        r_neighborhood(g, 3, 1)
    with pytest.raises(RadiusTooSmall):
        r_neighborhood(g, 0, 0)


def test_r_neighborhood_matches_library_distances(small_random_graphs):
    for g in small_random_graphs:
        for r in (1, 2, 3):
            for v in range(g.n):
                expected = brute_r_neighborhood(g, v, r)
                got = r_neighborhood(g, v, r)
                assert got.tolist() == expected.tolist()


def test_r_neighborhoods_csr_matches_single_queries(small_random_graphs):
    for g in small_random_graphs:
        for r in (1, 2, 3):
            rindptr, rindices = g.r_neighborhoods(r)
            assert rindptr[0] == 0 and rindptr[-1] == rindices.size
            for v in range(g.n):
                row = rindices[rindptr[v]:rindptr[v + 1]]
                assert row.tolist() == r_neighborhood(g, v, r).tolist()


def test_dr_upper_bounds_chain(small_random_graphs):
    for g in small_random_graphs:
        if g.max_degree < 1:
            continue
        dist = distance_matrix(g)
        for r in (2, 3):
            for v in range(g.n):
                reach = int(((dist[v] <= r) & (dist[v] > 0)).sum())
                tight, loose = dr_upper_bounds(g, v, r)
                assert reach <= tight <= loose


def test_dr_upper_bounds_validation():
    g = build_graph(3, [[0, 1], [1, 2]])
    with pytest.raises(RadiusTooSmall):
        dr_upper_bounds(g, 0, 1)
    with pytest.raises(VertexOutOfRange):
        dr_upper_bounds(g, 5, 2)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 30), st.integers(0, 10 ** 6))
def test_adjacency_symmetric_and_degrees_sum(n, seed):
    g = gnp(n, 0.3, seed=seed)
    assert int(g.degree.sum()) == 2 * g.m
    pairs = {(int(u), int(v)) for u, v in g.edges}
    for v in range(g.n):
        for u in g.neighbors(v):
            key = (min(v, int(u)), max(v, int(u)))
            assert key in pairs

import numpy as np
import pytest
import scipy.sparse as sp
from scipy.sparse.csgraph import shortest_path

from tsrcolor import build_graph, gnp


def distance_matrix(g):
    """All-pairs hop distances through an independent library routine."""
    data = np.ones(len(g.adj_indices))
    mat = sp.csr_matrix((data, g.adj_indices, g.adj_indptr), shape=(g.n, g.n))
    if g.n == 0:
        return np.zeros((0, 0))
    return shortest_path(mat, unweighted=True, directed=False)


def brute_r_neighborhood(g, v, r):
    dist = distance_matrix(g)
    return np.sort(np.nonzero((dist[v] <= r) & (np.arange(g.n) != v))[0])


@pytest.fixture
def small_random_graphs():
    graphs = []
    for seed, (n, p) in enumerate([(12, 0.2), (25, 0.15), (40, 0.1),
                                   (40, 0.25), (60, 0.07)]):
        graphs.append(gnp(n, p, seed=seed))
    return graphs


@pytest.fixture
def p3():
    return build_graph(3, [[0, 1], [1, 2]])

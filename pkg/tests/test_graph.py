import math
import random

import pytest

from _oracles import brute_c4_free, random_graph
from kplanar.graph import (
    Graph,
    GraphError,
    brute_force_girth,
    density_report,
    find_c3,
    find_c4,
    girth,
    has_c3,
    has_c4,
    is_petersen,
    petersen_graph,
)


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_cycles_and_forests():
    for n in range(3, 9):
        assert girth(cycle(n)) == n
    star = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    assert girth(star) == math.inf
    assert not has_c3(star) and not has_c4(star)


def test_petersen():
    p = petersen_graph()
    assert p.n == 10 and p.m == 15
    assert girth(p) == 5
    assert is_petersen(p)
    assert not is_petersen(cycle(10))


def test_witnesses():
    k4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    a, b, c = find_c3(k4)
    assert k4.has_edge(a, b) and k4.has_edge(b, c) and k4.has_edge(a, c)
    w = find_c4(cycle(4))
    assert w is not None and len(set(w)) == 4
    assert find_c4(cycle(5)) is None


def test_rejects_loops_and_multi_edges():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 1), (1, 0)])


def test_density_report():
    r = density_report(petersen_graph())
    assert (r.n, r.m, r.m_over_n) == (10, 15, 1.5)


def test_bfs_girth_matches_brute_force_small_sample():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert girth(g) == brute_force_girth(g)
        assert has_c4(g) == (not brute_c4_free(g))

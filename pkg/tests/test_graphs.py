import itertools
import random

import pytest

from rainbowpaths.closed_forms import HParams
from rainbowpaths.graphs import (
    BipartiteGraph,
    Graph,
    bipartite_hamilton_cycle,
    bridges,
    build_h_graph,
    complete_graph,
    components,
    has_path_on,
    is_path_in,
)
from rainbowpaths.errors import InvalidParameter


def star(n):
    return Graph(n, frozenset((0, v) for v in range(1, n)))


def cycle(n):
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def two_triangles(joined=False):
    edges = {(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}
    if joined:
        edges.add((2, 3))
    return Graph(6, frozenset(edges))


def random_graph(rng, n, p):
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def n_components(g):
    return len(components(g))


def brute_path(g, k):
    for perm in itertools.permutations(range(g.n), k):
        if all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
            return True
    return False


@pytest.mark.parametrize("n, m", [(1, 0), (4, 6), (6, 15)])
def test_complete_graph(n, m):
    assert len(complete_graph(n).edges) == m


def test_complete_graph_rejects_zero():
    with pytest.raises(InvalidParameter):
        complete_graph(0)


def test_graph_validation():
    with pytest.raises(InvalidParameter):
        Graph(3, frozenset({(0, 0)}))
    with pytest.raises(InvalidParameter):
        Graph(3, frozenset({(0, 3)}))
    assert Graph(3, frozenset({(2, 1)})).edges == {(1, 2)}


def test_h_graph_parts():
    g = build_h_graph(HParams(10, 6, 2))
    assert len(g.edges) == 18
    assert max(g.degree(v) for v in range(10)) == 9
    assert g.degree(0) == g.degree(1) == 9
    b = range(2, 8)
    for u in b:
        assert g.adj[u] == 0b11


def test_h_graph_removing_a_isolates_b():
    g = build_h_graph(HParams(7, 6, 1))
    assert len(g.edges) == 12
    h = Graph(7, frozenset(e for e in g.edges if 0 not in e))
    comps = components(h)
    for v in (1, 2):  # B = {1, 2}
        assert frozenset({v}) in comps


def test_components_examples():
    assert components(complete_graph(5)) == [frozenset(range(5))]
    assert components(Graph(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert [len(c) for c in components(two_triangles())] == [3, 3]


def test_components_order():
    g = Graph(6, frozenset({(4, 5), (1, 2), (0, 3)}))
    assert components(g) == [frozenset({0, 3}), frozenset({1, 2}), frozenset({4, 5})]


def test_bridges_examples():
    rng = random.Random(1)
    for n in range(2, 9):
        tree = Graph(n, frozenset((rng.randrange(v), v) for v in range(1, n)))
        assert bridges(tree) == tree.edges
    assert bridges(cycle(5)) == set()
    assert bridges(two_triangles(joined=True)) == {(2, 3)}


def test_bridges_by_definition():
    rng = random.Random(7)
    for _ in range(400):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        base = n_components(g)
        found = bridges(g)
        for e in g.edges:
            assert (e in found) == (n_components(g.without_edges([e])) > base)


@pytest.mark.parametrize("g, k, exists", [
    (complete_graph(5), 5, True),
    (star(5), 4, False),
    (star(5), 3, True),
    (build_h_graph(HParams(10, 6, 2)), 7, False),
    (build_h_graph(HParams(10, 6, 2)), 6, True),
])
def test_has_path_on_examples(g, k, exists):
    w = has_path_on(g, k)
    assert (w is not None) == exists
    if w is not None:
        assert len(w) == k and is_path_in(g, w)


def test_has_path_on_matches_permutations():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.random())
        for k in range(1, n + 2):
            w = has_path_on(g, k)
            assert (w is not None) == brute_path(g, k)
            if w is not None:
                assert len(w) == k and is_path_in(g, w)


def test_has_path_on_is_deterministic():
    g = complete_graph(6)
    assert has_path_on(g, 4) == [0, 1, 2, 3]


def full_bipartite(ell):
    return frozenset((a, b) for a in range(ell) for b in range(ell))


def is_ham_cycle(b, cyc):
    g = b.as_graph()
    return (len(cyc) == 2 * b.ell and len(set(cyc)) == len(cyc)
            and all(g.has_edge(x, y) for x, y in zip(cyc, cyc[1:] + cyc[:1])))


def brute_ham_cycle(b):
    ell = b.ell
    for bs in itertools.permutations(range(ell)):
        for rest in itertools.permutations(range(1, ell)):
            a_seq = (0,) + rest
            ok = all((a_seq[i], bs[i]) in b.edges and (a_seq[(i + 1) % ell], bs[i]) in b.edges
                     for i in range(ell))
            if ok:
                return True
    return False


def test_bipartite_cycle_examples():
    b = BipartiteGraph(2, full_bipartite(2))
    assert is_ham_cycle(b, bipartite_hamilton_cycle(b))
    matching = BipartiteGraph(3, frozenset((i, i) for i in range(3)))
    assert bipartite_hamilton_cycle(matching) is None
    for drop in full_bipartite(3):
        b = BipartiteGraph(3, full_bipartite(3) - {drop})
        assert is_ham_cycle(b, bipartite_hamilton_cycle(b))


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_bipartite_cycle_matches_brute_force_exhaustive(ell):
    full = sorted(full_bipartite(ell))
    for mask in range(1 << len(full)):
        b = BipartiteGraph(ell, frozenset(e for i, e in enumerate(full) if mask >> i & 1))
        cyc = bipartite_hamilton_cycle(b)
        assert (cyc is not None) == brute_ham_cycle(b)
        if cyc is not None:
            assert is_ham_cycle(b, cyc)


def test_bipartite_rejects_tiny():
    with pytest.raises(InvalidParameter):
        bipartite_hamilton_cycle(BipartiteGraph(1, frozenset({(0, 0)})))

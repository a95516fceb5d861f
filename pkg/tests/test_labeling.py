import random
import networkx as nx
from eigsquares.graph import Graph
from eigsquares.graph6 import decode
from eigsquares.families import (
    complete, cycle, path, star, petersen, complete_bipartite, circulant,
    disjoint_union
)
from eigsquares.labeling import canonical_labeling, canonical_form, are_isomorphic


def _random_graph(rng, n, p=0.5):
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return Graph(n, edges)


def _shuffled(rng, g):
    permutation = list(range(g.n))
    rng.shuffle(permutation)
    return g.relabel(permutation)


def _to_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_canonical_labeling():
    assert canonical_labeling(Graph(0)) == ()
    assert canonical_form(Graph(0)) == b'?'

    for g in (path(5), petersen(), complete_bipartite(2, 3), Graph(4)):
        labels = canonical_labeling(g)
        assert sorted(labels) == list(range(g.n))


def test_invariance():
    rng = random.Random(19)
    for g in (petersen(), cycle(8), circulant(9, [1, 3]), complete_bipartite(3, 4)):
        form = canonical_form(g)
        for _ in range(20):
            assert canonical_form(_shuffled(rng, g)) == form


def test_random_invariance():
    rng = random.Random(23)
    for _ in range(200):
        g = _random_graph(rng, rng.randint(1, 12), rng.random())
        assert canonical_form(_shuffled(rng, g)) == canonical_form(g)


def test_form_is_idempotent():
    rng = random.Random(29)
    for _ in range(100):
        g = _random_graph(rng, rng.randint(1, 10))
        form = canonical_form(g)
        representative = decode(form)
        assert are_isomorphic(representative, g)
        assert canonical_form(representative) == form


def test_non_isomorphic():
    assert canonical_form(path(4)) != canonical_form(star(4))
    assert not are_isomorphic(path(4), star(4))
    assert not are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3)))
    assert not are_isomorphic(complete(3), path(3))
    assert not are_isomorphic(path(3), path(4))


def test_networkx_agreement():
    rng = random.Random(31)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = _random_graph(rng, n)
        h = _random_graph(rng, n)
        expected = nx.is_isomorphic(_to_networkx(g), _to_networkx(h))
        assert are_isomorphic(g, h) == expected

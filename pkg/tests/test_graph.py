import random
import numpy as np
from sympy import Matrix, sstr, srepr, sympify
from pytest import raises, warns
from eigsquares._internal import EigsquaresWarning
from eigsquares.graph import (
    Graph, MAX_VERTICES, degree_stats, components, is_connected, is_cut_vertex,
    cyclomatic_number, is_bipartite, is_regular, is_complete, is_odd_cycle,
    is_star, blow_up
)
from eigsquares.families import complete, cycle, path, star, petersen


def test_order():
    assert Graph(0).n == 0
    assert Graph(5).m == 0
    assert len(Graph(4)) == 4
    assert Graph(np.int64(3)).n == 3

    with raises(TypeError):
        Graph('3')

    with raises(TypeError):
        Graph(True)

    with raises(ValueError):
        Graph(-1)

    with raises(ValueError):
        Graph(MAX_VERTICES + 1)


def test_edges():
    g = Graph(4, [(1, 0), (2, 3), (1, 2)])
    assert g.m == 3
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.neighbors(1) == (0, 2)
    assert g.degree(1) == 2
    assert g.degrees() == (1, 2, 2, 1)
    assert g.rows == (0b0010, 0b0101, 0b1010, 0b0100)

    with raises(ValueError):
        Graph(3, [(0, 3)])

    with raises(ValueError):
        Graph(3, [(1, 1)])


def test_duplicate_edges():
    with warns(EigsquaresWarning):
        g = Graph(3, [(0, 1), (1, 0)])
    assert g.m == 1


def test_from_rows():
    assert Graph.from_rows([0b10, 0b01]) == Graph(2, [(0, 1)])

    with raises(ValueError):
        Graph.from_rows([0b10, 0b00])

    with raises(ValueError):
        Graph.from_rows([0b01])

    with raises(ValueError):
        Graph.from_rows([0b100, 0b000])


def test_from_adjacency():
    matrix = [[0, 1, 1], [1, 0, 0], [1, 0, 0]]
    g = Graph.from_adjacency(matrix)
    assert g == star(3)
    assert np.array_equal(g.adjacency_matrix(), np.array(matrix, dtype=float))

    with raises(ValueError):
        Graph.from_adjacency([[0, 1]])

    with raises(ValueError):
        Graph.from_adjacency([[0, 2], [2, 0]])

    with raises(ValueError):
        Graph.from_adjacency([[0, 1], [0, 0]])

    with raises(ValueError):
        Graph.from_adjacency([[1, 0], [0, 0]])


def test_large_order():
    assert MAX_VERTICES >= 100
    g = path(MAX_VERTICES)
    assert g.m == MAX_VERTICES - 1
    assert Graph.from_adjacency(g.adjacency_matrix().astype(int)) == g


def test_equality():
    assert path(4) == Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert path(4) != star(4)
    assert path(4) != 'P4'
    assert hash(path(4)) == hash(Graph(4, [(2, 3), (1, 2), (0, 1)]))
    assert len({path(4), Graph(4, [(0, 1), (1, 2), (2, 3)])}) == 1


def test_operations():
    g = path(4)
    assert g.complement() == Graph(4, [(0, 2), (0, 3), (1, 3)])
    assert complete(4).complement() == Graph(4)
    assert g.induced_subgraph([3, 2, 1]) == path(3)
    assert g.remove_vertex(0) == path(3)
    assert g.relabel([3, 2, 1, 0]) == g
    assert g.relabel([1, 0, 2, 3]) == Graph(4, [(0, 1), (0, 2), (2, 3)])
    assert g.with_edges([(0, 3)]) == cycle(4)

    with raises(ValueError):
        g.relabel([0, 0, 1, 2])


def test_printing(capfd):
    g = path(3)
    assert sstr(g) == 'Graph(n=3, m=2)'
    assert str(g) == 'Graph(n=3, m=2)'
    assert srepr(g) == 'Graph(3, [(0, 1), (1, 2)])'
    assert sympify(g) == Matrix([[0, 1, 0], [1, 0, 1], [0, 1, 0]])

    g.show()
    out, _ = capfd.readouterr()
    assert out.startswith('\n')
    assert '1' in out


def test_degree_stats():
    assert degree_stats(star(5)) == (1, 4, (4, 1, 1, 1, 1))
    assert degree_stats(Graph(0)) == (None, None, ())
    assert degree_stats(petersen()).Delta == 3


def test_components():
    g = Graph(6, [(0, 3), (3, 5), (1, 4)])
    partition = components(g)
    assert partition.kappa == 3
    assert partition.labels == (0, 1, 2, 0, 1, 0)
    assert partition.members(0) == (0, 3, 5)
    assert components(Graph(0)).kappa == 0

    assert is_connected(cycle(5))
    assert not is_connected(g)
    assert not is_connected(Graph(0))
    assert is_connected(Graph(1))


def test_cut_vertices():
    g = path(4)
    assert [is_cut_vertex(g, v) for v in range(4)] == [False, True, True, False]
    assert not any(is_cut_vertex(cycle(5), v) for v in range(5))
    assert is_cut_vertex(star(4), 0)
    assert not is_cut_vertex(path(2), 0)


def test_cyclomatic_number():
    assert cyclomatic_number(path(6)) == 0
    assert cyclomatic_number(cycle(6)) == 1
    assert cyclomatic_number(complete(4)) == 3
    assert cyclomatic_number(petersen()) == 6
    assert cyclomatic_number(Graph(3)) == 0


def test_predicates():
    assert is_bipartite(cycle(6))
    assert not is_bipartite(cycle(5))
    assert is_bipartite(Graph(3))

    assert is_regular(petersen())
    assert not is_regular(path(3))

    assert is_complete(complete(5))
    assert is_complete(Graph(1))
    assert not is_complete(cycle(4))

    assert is_odd_cycle(cycle(7))
    assert not is_odd_cycle(cycle(6))
    assert is_odd_cycle(complete(3))
    assert not is_odd_cycle(path(2))

    assert is_star(star(6))
    assert is_star(path(2))
    assert not is_star(path(4))


def test_blow_up():
    g = blow_up(path(3), [2, 1, 3])
    assert g.n == 6
    assert g.m == 2 * 1 + 1 * 3
    assert g.neighbors(0) == (2,)
    assert g.neighbors(2) == (0, 1, 3, 4, 5)
    assert blow_up(path(3), {0: 2, 1: 1, 2: 3}) == g
    assert blow_up(complete(3), [1, 1, 1]) == complete(3)

    with raises(ValueError):
        blow_up(path(3), [1, 1])

    with raises(ValueError):
        blow_up(path(3), [1, 0, 1])

    with raises(ValueError):
        blow_up(path(3), {0: 1, 1: 1})


def test_blow_up_random():
    rng = random.Random(43)
    for _ in range(200):
        n = rng.randint(1, 8)
        edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.5]
        g = Graph(n, edges)
        a = [rng.randint(1, 4) for _ in range(n)]
        expanded = blow_up(g, a)
        assert expanded.n == sum(a)
        assert expanded.m == sum(a[u] * a[v] for u, v in g.edges)

        start = 0
        for v in range(n):
            block = range(start, start + a[v])
            assert len({expanded.neighbors(x) for x in block}) == 1
            assert not any(expanded.has_edge(x, y) for x in block for y in block)
            start += a[v]

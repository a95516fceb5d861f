import io
import random
import networkx as nx
from pytest import raises, mark
from eigsquares._internal import Graph6FormatError
from eigsquares.graph import Graph
from eigsquares.graph6 import HEADER, encode, decode, read_graph6
from eigsquares.families import barbell, complete, path, petersen


def _random_graph(rng, n, p=0.4):
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return Graph(n, edges)


def _to_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_encode():
    assert encode(Graph(0)) == '?'
    assert encode(Graph(1)) == '@'
    assert encode(complete(3)) == 'Bw'
    assert encode(path(3)) == 'Bg'
    expected = nx.to_graph6_bytes(_to_networkx(petersen()), header=False)
    assert encode(petersen()) == expected.decode().strip()


def test_long_order():
    g = path(63)
    text = encode(g)
    assert text.startswith('~??~')
    assert decode(text) == g

    g = barbell(50)
    text = encode(g)
    assert text.startswith('~?@' + chr(63 + 36))
    assert decode(text) == g


def test_decode():
    assert decode('Bw') == complete(3)
    assert decode(b'Bw') == complete(3)
    assert decode('Bw\n') == complete(3)
    assert decode(HEADER + 'Bw') == complete(3)
    assert decode(encode(petersen())) == petersen()


def test_networkx_interop():
    rng = random.Random(7)
    for _ in range(200):
        g = _random_graph(rng, rng.randint(1, 30))
        expected = nx.to_graph6_bytes(_to_networkx(g), header=False).decode().strip()
        assert encode(g) == expected
        parsed = nx.from_graph6_bytes(expected.encode())
        assert sorted(tuple(sorted(e)) for e in parsed.edges) == list(g.edges)


def test_random_round_trip():
    rng = random.Random(11)
    for _ in range(1000):
        g = _random_graph(rng, rng.randint(0, 30), rng.random())
        assert decode(encode(g)) == g


@mark.slow
def test_round_trip_exhaustive(connected_graphs, connected_graphs_8, all_graphs):
    rng = random.Random(13)
    graphs = [g for n in connected_graphs for g in connected_graphs[n]]
    graphs += [g for n in all_graphs for g in all_graphs[n]] + connected_graphs_8
    for g in graphs:
        assert decode(encode(g)) == g
        permutation = list(range(g.n))
        rng.shuffle(permutation)
        shuffled = g.relabel(permutation)
        assert decode(encode(shuffled)) == shuffled


def test_decode_errors():
    with raises(Graph6FormatError) as error:
        decode('B w')
    assert error.value.offset == 1

    with raises(Graph6FormatError):
        decode('')

    with raises(Graph6FormatError) as error:
        decode('B')
    assert error.value.offset == 1

    with raises(Graph6FormatError) as error:
        decode('Bww')
    assert error.value.offset == 2

    with raises(Graph6FormatError):
        decode('Bx')

    with raises(Graph6FormatError):
        decode('~?')

    with raises(Graph6FormatError):
        decode('~?A?')


def test_read_graph6():
    stream = io.StringIO('Bw\n\n' + encode(petersen()) + '\n')
    graphs = list(read_graph6(stream))
    assert graphs == [complete(3), petersen()]

    stream = io.StringIO('Bw\nB!\n')
    with raises(Graph6FormatError) as error:
        list(read_graph6(stream))
    assert error.value.line == 2
    assert 'line 2' in str(error.value)

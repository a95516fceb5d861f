from itertools import product
from pytest import raises, mark
from eigsquares._internal import ColoringBudgetError
from eigsquares.graph import Graph
from eigsquares.spectral import summarize
from eigsquares.bounds import Status, ando_lin_check
from eigsquares.families import (
    complete, empty, cycle, path, star, petersen, complete_bipartite,
    complete_q_partite, disjoint_union
)
from eigsquares.chromatic import chromatic_number, brooks_check, regular_chain_check


def _is_proper(g, colors):
    return all(colors[u] != colors[v] for u, v in g.edges)


def _colorable(g, k):
    return any(_is_proper(g, colors) for colors in product(range(k), repeat=g.n))


def test_chromatic_number():
    expected = [
        (Graph(0), 0),
        (empty(3), 1),
        (path(6), 2),
        (cycle(6), 2),
        (cycle(5), 3),
        (cycle(9), 3),
        (complete(4), 4),
        (petersen(), 3),
        (complete_q_partite([2, 3, 1, 2]), 4),
        (disjoint_union(complete(3), complete(5)), 5),
    ]
    for g, chi in expected:
        result = chromatic_number(g)
        assert result.chi == chi
        assert len(result.witness) == g.n
        assert _is_proper(g, result.witness)
        assert set(result.witness) == set(range(chi))


def test_chromatic_budget():
    with raises(ValueError):
        chromatic_number(cycle(5), budget=0)

    with raises(ColoringBudgetError) as error:
        chromatic_number(petersen(), budget=1)
    assert error.value.nodes == 1

    assert chromatic_number(complete(6), budget=1).chi == 6


def test_brooks_check():
    entry = brooks_check(petersen(), 3)
    assert entry.status is Status.SATISFIED
    assert entry.equality

    assert brooks_check(star(5), 2).status is Status.SATISFIED
    assert brooks_check(cycle(6), 2).equality

    for g, reason in [
        (complete(4), 'complete graph'),
        (cycle(7), 'odd cycle'),
        (Graph(3, [(0, 1)]), 'requires connected'),
    ]:
        entry = brooks_check(g, chromatic_number(g).chi)
        assert entry.status is Status.INAPPLICABLE
        assert entry.reason == reason

    assert brooks_check(star(5), 5).status is Status.VIOLATED


def test_regular_chain_check():
    g = petersen()
    entry = regular_chain_check(g, summarize(g), 3)
    assert entry.status is Status.SATISFIED
    assert (entry.left, round(entry.right, 9)) == (10, 16)

    g = cycle(6)
    entry = regular_chain_check(g, summarize(g), 2)
    assert entry.status is Status.SATISFIED
    assert entry.equality

    g = complete_bipartite(3, 3)
    entry = regular_chain_check(g, summarize(g), 2)
    assert entry.status is Status.SATISFIED
    assert not entry.equality

    for g in (complete(5), cycle(5), path(4), Graph(3)):
        entry = regular_chain_check(g, summarize(g), chromatic_number(g).chi)
        assert entry.status is Status.INAPPLICABLE

    g = petersen()
    entry = regular_chain_check(g, summarize(g), 1)
    assert entry.status is Status.VIOLATED
    assert entry.reason == "2m/chi > s-"


@mark.slow
def test_chromatic_number_exhaustive(all_graphs):
    for n in range(1, 6):
        for g in all_graphs[n]:
            chi = chromatic_number(g).chi
            assert _colorable(g, chi)
            assert not _colorable(g, chi - 1)


@mark.slow
def test_chromatic_bounds_exhaustive(connected_graphs):
    for n in range(2, 8):
        for g in connected_graphs[n]:
            s = summarize(g)
            chi = chromatic_number(g).chi
            entries = ando_lin_check(g, s, chi)
            entries += [brooks_check(g, chi), regular_chain_check(g, s, chi)]
            assert all(e.status is not Status.VIOLATED for e in entries)

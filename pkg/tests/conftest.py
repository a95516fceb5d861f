from pytest import fixture
from eigsquares.search import SearchConfig, enumerate_graphs


def _by_order(cfg):
    graphs = {n: [] for n in range(cfg.n_min, cfg.n_max + 1)}
    for g in enumerate_graphs(cfg):
        graphs[g.n].append(g)
    return graphs


@fixture(scope='session')
def connected_graphs():
    """Connected graphs on 1 to 7 vertices, grouped by order."""

    return _by_order(SearchConfig(n_min=1, n_max=7, connected=True, jobs=1))


@fixture(scope='session')
def connected_graphs_8():
    """Connected graphs on 8 vertices."""

    cfg = SearchConfig(n_min=8, n_max=8, connected=True, jobs=1)
    return list(enumerate_graphs(cfg))


@fixture(scope='session')
def all_graphs():
    """All graphs on 1 to 6 vertices, grouped by order."""

    return _by_order(SearchConfig(n_min=1, n_max=6, connected=False, jobs=1))

#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Families
========

This module contains constructors for the graph families with a known
spectral behaviour, together with the closed-form barbell spectrum.

Every constructor fixes its vertex labeling, documented below, so that
results are reproducible.

Classes
-------
BarbellPrediction
    Closed-form spectrum of the barbell graph.

Functions
---------
complete(n), empty(n), cycle(n), path(n), star(n)
    Basic families.
complete_bipartite(a, b), complete_q_partite(sizes)
    Complete multipartite graphs.
petersen()
    The Petersen graph.
barbell(k)
    Two k-cliques joined by a bridge.
barbell_predicted_spectrum(k)
    Closed-form barbell eigenvalues.
barbell_characteristic_polynomial(k)
    Exact barbell characteristic polynomial.
disjoint_union(g1, g2), circulant(n, offsets), line_graph(g)
    Derived graphs.
odd_cycle_slack_table(max_n)
    Conjecture slack of the odd cycles up to ``max_n`` vertices.
"""

from dataclasses import dataclass
from math import sqrt
from typing import Callable, Iterable, Sequence

import numpy as np
from sympy import Poly, Symbol

from eigsquares.graph import Graph, blow_up


def _check_size(name: str, value: int, minimum: int):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer")
    elif value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}")


def complete(n: int) -> Graph:
    """Complete graph ``K_n`` on the vertices ``0, ..., n - 1``."""

    _check_size('n', n, 1)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""

    _check_size('n', n, 1)
    return Graph(n)


def cycle(n: int) -> Graph:
    """Cycle ``C_n`` with edges ``(i, i + 1 mod n)``."""

    _check_size('n', n, 3)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path ``P_n`` with edges ``(i, i + 1)``."""

    _check_size('n', n, 1)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star ``K_{1, n-1}`` centred at vertex 0."""

    _check_size('n', n, 2)
    return Graph(n, [(0, v) for v in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Complete bipartite graph ``K_{a, b}``.

    The parts are ``0, ..., a - 1`` and ``a, ..., a + b - 1``.
    """

    return complete_q_partite([a, b])


def complete_q_partite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with the given part sizes.

    Parts are consecutive blocks of vertices, in the order of ``sizes``.

    Raises
    ------
    ValueError
        If no part is given or a part is empty.

    Examples
    --------

    >>> complete_q_partite([2, 3, 4]).m
    26
    """

    sizes = list(sizes)
    if len(sizes) == 0:
        raise ValueError("At least one part is required")
    for size in sizes:
        _check_size('Part size', size, 1)

    return blow_up(complete(len(sizes)), sizes)


def petersen() -> Graph:
    """Petersen graph.

    Vertices 0-4 form the outer 5-cycle, vertex ``i`` is joined to
    ``i + 5`` and the inner vertices 5-9 form the pentagram
    ``5 + i ~ 5 + (i + 2) mod 5``.
    """

    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def barbell(k: int) -> Graph:
    """Barbell graph: two ``k``-cliques joined by one bridge.

    The cliques are ``0, ..., k - 1`` and ``k, ..., 2k - 1``; the bridge
    is ``(k - 1, k)``. The graph has ``2k`` vertices and
    ``k(k - 1) + 1`` edges.

    Raises
    ------
    ValueError
        If ``k < 3``.
    """

    _check_size('k', k, 3)
    return disjoint_union(complete(k), complete(k)).with_edges([(k - 1, k)])


@dataclass(frozen=True)
class BarbellPrediction:
    """Closed-form spectrum of ``barbell(k)``.

    The characteristic polynomial factors as ``(x + 1)^(2k-4)`` times a
    quartic whose four roots are
    ``(k - 1 -+ sqrt(k^2 - 2k + 5)) / 2`` and
    ``(k - 3 -+ sqrt(k^2 + 2k - 3)) / 2``.

    Attributes
    ----------
    k : int
        Clique size.
    roots : tuple[float]
        The four roots of the quartic factor, in descending order.
    values : tuple[float]
        All ``2k`` eigenvalues in descending order.
    """

    k: int
    roots: tuple[float, ...]
    values: tuple[float, ...]

    @property
    def positive_count(self) -> int:
        return sum(1 for x in self.values if x > 0)

    def deviation(self, spectrum: Iterable[float]) -> float:
        """Largest difference to a computed spectrum, compared as sorted
        multisets."""

        computed = np.sort(np.asarray(list(spectrum), dtype=float))[::-1]
        if len(computed) != len(self.values):
            raise ValueError(
                f"Expected {len(self.values)} eigenvalues, got {len(computed)}"
            )
        return float(np.abs(computed - np.array(self.values)).max())


def barbell_predicted_spectrum(k: int) -> BarbellPrediction:
    """Closed-form eigenvalues of ``barbell(k)``.

    Examples
    --------

    >>> prediction = barbell_predicted_spectrum(3)
    >>> round((3 - 3 - (-3 + 2 * 3 + 3**2) ** 0.5) ** 2, 9)
    12.0
    >>> prediction.positive_count
    2
    """

    _check_size('k', k, 3)

    first, second = sqrt(k * k - 2 * k + 5), sqrt(k * k + 2 * k - 3)
    roots = sorted(
        [
            (k - 1 - first) / 2,
            (k - 1 + first) / 2,
            (k - 3 - second) / 2,
            (k - 3 + second) / 2,
        ],
        reverse=True,
    )
    values = sorted(roots + [-1.0] * (2 * k - 4), reverse=True)

    return BarbellPrediction(k, tuple(roots), tuple(values))


def barbell_characteristic_polynomial(k: int, x: Symbol = Symbol('x')) -> Poly:
    """Exact characteristic polynomial of ``barbell(k)``,
    ``(x + 1)^(2k-4) [(x + 1)^2 (x - k + 1)^2 - (x - k + 2)^2]``."""

    _check_size('k', k, 3)
    quartic = (x + 1) ** 2 * (x - k + 1) ** 2 - (x - k + 2) ** 2
    return Poly((x + 1) ** (2 * k - 4) * quartic, x)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; the vertices of ``g2`` are shifted by ``g1.n``."""

    return Graph.from_rows(list(g1.rows) + [row << g1.n for row in g2.rows])


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    """Circulant graph: ``i ~ i + s mod n`` for every offset ``s``.

    Raises
    ------
    ValueError
        If an offset lies outside ``1, ..., n // 2``.

    Examples
    --------

    >>> circulant(5, [1, 2]) == complete(5)
    True
    """

    _check_size('n', n, 1)
    offsets = sorted(set(offsets))
    invalid = [s for s in offsets if not 1 <= s <= n // 2]
    if len(invalid) > 0:
        raise ValueError(
            f"Offsets must lie between 1 and {n // 2} ({str(invalid)[1:-1]})"
        )

    edges = {tuple(sorted((i, (i + s) % n))) for i in range(n) for s in offsets}
    return Graph(n, sorted(edges))


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is the ``i``-th edge of ``g.edges``."""

    edges = g.edges
    pairs = []
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            if a in edges[j] or b in edges[j]:
                pairs.append((i, j))
    return Graph(len(edges), pairs)


def odd_cycle_slack_table(max_n: int = 21) -> list[tuple[int, float, float, float]]:
    """Rows ``(n, s_minus, s_plus, slack)`` for the odd cycles ``C_3``
    to ``C_max_n``."""

    from eigsquares.bounds import conjecture_slack
    from eigsquares.spectral import summarize

    rows = []
    for n in range(3, max_n + 1, 2):
        g = cycle(n)
        summary = summarize(g)
        rows.append((n, summary.s_minus, summary.s_plus, conjecture_slack(g, summary)))
    return rows


# Constructors reachable from the command line, with their parameter kinds:
# 'int' for a single size, 'ints' for a comma-separated list, 'graph6' for a
# base graph given in graph6.
FAMILIES: dict[str, tuple[Callable[..., Graph], tuple[str, ...]]] = {
    'complete': (complete, ('int',)),
    'empty': (empty, ('int',)),
    'cycle': (cycle, ('int',)),
    'path': (path, ('int',)),
    'star': (star, ('int',)),
    'complete-bipartite': (complete_bipartite, ('int', 'int')),
    'complete-q-partite': (complete_q_partite, ('ints',)),
    'petersen': (petersen, ()),
    'barbell': (barbell, ('int',)),
    'circulant': (circulant, ('int', 'ints')),
    'line-graph': (line_graph, ('graph6',)),
}

#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Chromatic
=========

This module contains the exact chromatic number of small graphs and the
checks that depend on it.

Classes
-------
ColoringResult
    Chromatic number with a witness coloring.

Functions
---------
chromatic_number(g, budget)
    Exact chromatic number by branch and bound.
brooks_check(g, chi)
    ``chi <= Delta`` outside complete graphs and odd cycles.
regular_chain_check(g, s, chi)
    ``n <= 2m/chi <= s-`` for connected regular graphs.
"""

from typing import NamedTuple, Optional

from eigsquares._internal import DEFAULT_TOLERANCES, Tolerances, ColoringBudgetError
from eigsquares.bounds import BoundEntry, Status, _compare, _inapplicable
from eigsquares.graph import (
    Graph,
    _bits,
    degree_stats,
    is_complete,
    is_connected,
    is_odd_cycle,
    is_regular,
)
from eigsquares.spectral import SpectralSummary

DEFAULT_BUDGET = 1_000_000


class ColoringResult(NamedTuple):
    """Chromatic number ``chi`` and a proper coloring with ``chi`` colors.

    ``witness[v]`` is the color of vertex ``v``, between 0 and
    ``chi - 1``.
    """

    chi: int
    witness: tuple[int, ...]


def _greedy_clique(rows: tuple[int, ...], order: list[int]) -> int:
    """Size of the largest clique grown greedily from each vertex."""

    best = 0
    for start in order:
        clique = 1 << start
        common = rows[start]
        size = 1
        for v in order:
            if common >> v & 1:
                clique |= 1 << v
                common &= rows[v]
                size += 1
        best = max(best, size)
    return best


def _greedy_coloring(rows: tuple[int, ...], order: list[int]) -> list[int]:
    colors = [-1] * len(rows)
    for v in order:
        used = {colors[u] for u in _bits(rows[v])}
        color = 0
        while color in used:
            color += 1
        colors[v] = color
    return colors


class _ColoringSearch:
    """Backtracking search for a coloring with at most ``k`` colors.

    A vertex only opens a new color when all used colors are forbidden,
    which removes color permutations from the tree.
    """

    def __init__(self, rows: tuple[int, ...], order: list[int], budget: int):
        self._rows = rows
        self._order = order
        self._budget = budget
        self.nodes = 0

    def find(self, k: int) -> Optional[list[int]]:
        colors = [-1] * len(self._rows)
        if self._assign(0, 0, k, colors):
            return colors
        return None

    def _assign(self, index: int, used: int, k: int, colors: list[int]) -> bool:
        if index == len(self._order):
            return True

        v = self._order[index]
        forbidden = {colors[u] for u in _bits(self._rows[v])}
        for color in range(min(used + 1, k)):
            if color in forbidden:
                continue
            self.nodes += 1
            if self.nodes > self._budget:
                raise ColoringBudgetError(self._budget)
            colors[v] = color
            if self._assign(index + 1, max(used, color + 1), k, colors):
                return True
        colors[v] = -1

        return False


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> ColoringResult:
    """Exact chromatic number.

    Vertices are visited in descending degree order, ties broken by
    index. A greedy clique gives the lower bound and a greedy coloring the
    first upper bound; backtracking then looks for colorings with one
    color less until none exists or the lower bound is met.

    Parameters
    ----------
    g : Graph
        The graph. Practical up to about 16 vertices.
    budget : int, default=DEFAULT_BUDGET
        Maximum number of search nodes.

    Returns
    -------
    result : ColoringResult
        ``chi`` is 0 for the null graph.

    Raises
    ------
    ValueError
        If the budget is not positive.
    ColoringBudgetError
        If the search exceeds the budget.

    Examples
    --------

    >>> from eigsquares.families import cycle
    >>> chromatic_number(cycle(5)).chi
    3
    """

    if budget <= 0:
        raise ValueError(f"Budget must be positive, got {budget}")
    elif g.n == 0:
        return ColoringResult(0, ())

    rows = g.rows
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))

    lower = _greedy_clique(rows, order)
    best = _greedy_coloring(rows, order)
    chi = max(best) + 1

    search = _ColoringSearch(rows, order, budget)
    while chi > lower:
        colors = search.find(chi - 1)
        if colors is None:
            break
        best, chi = colors, chi - 1

    return ColoringResult(chi, tuple(best))


def brooks_check(
    g: Graph, chi: int, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> BoundEntry:
    """``chi <= Delta`` for connected graphs that are neither complete nor
    odd cycles; the two exceptional families are inapplicable."""

    if not is_connected(g):
        return _inapplicable('brooks', "requires connected")
    elif is_complete(g):
        return _inapplicable('brooks', "complete graph")
    elif is_odd_cycle(g):
        return _inapplicable('brooks', "odd cycle")

    return _compare('brooks', chi, degree_stats(g).Delta, tolerances)


def regular_chain_check(
    g: Graph, s: SpectralSummary, chi: int, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> BoundEntry:
    """``n = 2m/Delta <= 2m/chi <= s-`` for connected regular graphs that
    are neither complete nor odd cycles.

    The first link is Brooks' theorem, the second the Ando-Lin bound
    ``s+/s- <= chi - 1`` rewritten with ``s+ + s- = 2m``.
    """

    if not (is_connected(g) and is_regular(g)) or g.m == 0:
        return _inapplicable('regular_chain', "requires connected regular with an edge")
    elif is_complete(g) or is_odd_cycle(g):
        return _inapplicable('regular_chain', "complete graph or odd cycle")

    middle = 2 * g.m / chi
    brooks_link = _compare('regular_chain', g.n, middle, tolerances)
    ando_lin_link = _compare('regular_chain', middle, s.s_minus, tolerances)
    entry = _compare('regular_chain', g.n, s.s_minus, tolerances)

    if brooks_link.status is Status.VIOLATED:
        reason = "n > 2m/chi"
    elif ando_lin_link.status is Status.VIOLATED:
        reason = "2m/chi > s-"
    else:
        return entry

    return BoundEntry(
        'regular_chain', g.n, s.s_minus, Status.VIOLATED, entry.equality, reason
    )

#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Labeling
========

This module contains the canonical labeling used as isomorphism key.

The labeling refines an ordered vertex partition until it is equitable,
then individualizes vertices of the first smallest non-singleton cell and
refines again, down to discrete partitions. Every discrete partition
orders the vertices; the canonical order is the one whose relabelled
adjacency rows form the largest tuple. Twin vertices and automorphisms
found along the way prune branches whose leaves are images of leaves
already visited.

Functions
---------
canonical_labeling(g)
    Canonical label of every vertex.
canonical_form(g)
    Isomorphism-invariant byte string.
are_isomorphic(g, h)
    Isomorphism test through canonical forms.
"""

from typing import Optional, Sequence

from eigsquares.graph import Graph, _bits
from eigsquares.graph6 import encode

Cell = tuple[int, ...]


def _mask(cell: Cell) -> int:
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask


def _refine(rows: Sequence[int], cells: list[Cell]) -> list[Cell]:
    """Splits cells by neighbour counts until the partition is equitable.

    All cells are split at once against the previous partition, and the
    pieces of a cell are ordered by their count vectors, so the result
    depends only on the graph and the incoming ordered partition.
    """

    while True:
        masks = [_mask(cell) for cell in cells]
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {
                v: tuple((rows[v] & mask).bit_count() for mask in masks) for v in cell
            }
            for key in sorted(set(signature.values())):
                refined.append(tuple(v for v in cell if signature[v] == key))
        if len(refined) == len(cells):
            return refined
        cells = refined


class _LabelingSearch:
    """Search tree over the discrete refinements of one graph."""

    def __init__(self, g: Graph):
        self._rows = g.rows
        self._n = g.n
        self._first: Optional[tuple[tuple[int, ...], Cell]] = None
        self._best: Optional[tuple[tuple[int, ...], Cell]] = None
        self._automorphisms: list[list[int]] = []

    @property
    def best_order(self) -> Cell:
        assert self._best is not None
        return self._best[1]

    def run(self):
        self._visit([tuple(range(self._n))], ())

    def _visit(self, cells: list[Cell], prefix: Cell):
        cells = _refine(self._rows, cells)

        target = None
        for index, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = index
        if target is None:
            self._leaf(tuple(cell[0] for cell in cells))
            return

        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if self._is_redundant(v, explored, prefix):
                continue
            explored.append(v)
            rest = tuple(u for u in cell if u != v)
            split = cells[:target] + [(v,), rest] + cells[target + 1 :]
            self._visit(split, prefix + (v,))

    def _is_redundant(self, v: int, explored: list[int], prefix: Cell) -> bool:
        rows = self._rows
        for u in explored:
            if rows[u] == rows[v] or rows[u] | 1 << u == rows[v] | 1 << v:
                return True

        if explored and self._automorphisms:
            roots = self._orbit_roots(prefix)
            return any(roots[u] == roots[v] for u in explored)

        return False

    def _orbit_roots(self, prefix: Cell) -> list[int]:
        """Orbit representatives under the known automorphisms that fix
        ``prefix`` pointwise."""

        parent = list(range(self._n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self._automorphisms:
            if all(perm[v] == v for v in prefix):
                for v in range(self._n):
                    a, b = find(v), find(perm[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)

        return [find(v) for v in range(self._n)]

    def _leaf(self, order: Cell):
        label = [0] * self._n
        for i, v in enumerate(order):
            label[v] = i
        certificate = tuple(
            sum(1 << label[u] for u in _bits(self._rows[v])) for v in order
        )

        if self._first is None or self._best is None:
            self._first = self._best = (certificate, order)
            return

        for reference, reference_order in (self._first, self._best):
            if certificate == reference:
                perm = [0] * self._n
                for a, b in zip(reference_order, order):
                    perm[a] = b
                if perm != list(range(self._n)):
                    self._automorphisms.append(perm)
                return

        if certificate > self._best[0]:
            self._best = (certificate, order)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Canonical label of every vertex.

    Two graphs are isomorphic iff relabelling each by its canonical
    labeling gives the same graph.

    Returns
    -------
    labels : tuple[int]
        ``labels[v]`` is the canonical label of vertex ``v``.
    """

    if g.n == 0:
        return ()

    search = _LabelingSearch(g)
    search.run()

    labels = [0] * g.n
    for i, v in enumerate(search.best_order):
        labels[v] = i

    return tuple(labels)


def canonical_form(g: Graph, labels: Optional[Sequence[int]] = None) -> bytes:
    """Isomorphism-invariant byte string of a graph.

    The form is the graph6 encoding of the canonically relabelled graph,
    so it also decodes back to a representative of the class.

    Parameters
    ----------
    g : Graph
        The graph.
    labels : Sequence[int], optional
        Canonical labeling of ``g`` when already available.

    Examples
    --------

    >>> from eigsquares.families import path, star
    >>> canonical_form(path(4)) == canonical_form(star(4))
    False
    """

    if labels is None:
        labels = canonical_labeling(g)

    return encode(g.relabel(labels)).encode('ascii')


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)

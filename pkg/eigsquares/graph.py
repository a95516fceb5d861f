#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Graph
=====

This module contains the simple undirected graph used as input by every
other module, together with its basic structural queries.

Classes
-------
Graph
    Creates an immutable simple undirected graph.
ComponentPartition
    Partition of the vertices into connected components.
DegreeStats
    Minimum degree, maximum degree and degree sequence.

Functions
---------
degree_stats(g)
    Returns the degree statistics of a graph.
components(g)
    Returns the connected components of a graph.
cyclomatic_number(g)
    Returns ``m - n + kappa``.
blow_up(g, multiplicities)
    Replaces every vertex by an independent set of twins.
is_connected(g), is_bipartite(g), is_regular(g), is_complete(g),
is_odd_cycle(g), is_star(g)
    Structural predicates.
"""

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union

import numpy as np
from sympy import ImmutableDenseMatrix, sstr, srepr
from sympy.printing.pretty.stringpict import prettyForm

from eigsquares._internal import _show_object, _show_eigsquares_warning

# Packed rows are Python ints, so the cap only bounds the cost of the
# dense eigensolver and of the labeling search.
MAX_VERTICES = 128


class Graph:
    """Simple undirected graph.

    The adjacency is stored as a packed bit matrix: row ``v`` is an int
    whose bit ``u`` is set iff ``u`` and ``v`` are adjacent. Vertices are
    the integers ``0, ..., n - 1``. Instances are immutable.

    Parameters
    ----------
    n : int
        Number of vertices, between 0 and ``MAX_VERTICES``.
    edges : Iterable[tuple[int, int]], default=()
        Unordered vertex pairs.

    Attributes
    ----------
    n : int
        Number of vertices.
    m : int
        Number of edges.
    rows : tuple[int]
        Adjacency rows as bit masks.
    edges : tuple[tuple[int, int]]
        Edges ``(u, v)`` with ``u < v``, in lexicographic order.

    Raises
    ------
    TypeError
        If the order is not an integer.
    ValueError
        If the order is out of range, an edge is a loop or an endpoint
        is not a vertex.

    Warns
    -----
    EigsquaresWarning
        Duplicate edges, which are merged.

    Examples
    --------

    >>> from eigsquares import Graph
    >>> triangle = Graph(3, [(0, 1), (1, 2), (0, 2)])
    >>> triangle.m
    3
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        self._n: int
        self._rows: tuple[int, ...]
        self._m: int
        self._set_order(n)
        self._set_rows(edges)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> 'Graph':
        """Builds a graph from adjacency bit masks.

        Parameters
        ----------
        rows : Sequence[int]
            Row ``v`` has bit ``u`` set iff ``uv`` is an edge.

        Raises
        ------
        ValueError
            If the rows are not symmetric, contain loops or point
            outside the vertex set.
        """

        rows = [int(row) for row in rows]
        graph = cls.__new__(cls)
        graph._set_order(len(rows))
        full = (1 << graph._n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"Row {v} refers to vertices outside the graph")
            elif row >> v & 1:
                raise ValueError(f"Vertex {v} has a loop")
        for v, row in enumerate(rows):
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"Adjacency is not symmetric at ({u}, {v})")

        graph._rows = tuple(int(row) for row in rows)
        graph._m = sum(row.bit_count() for row in graph._rows) // 2
        return graph

    @classmethod
    def from_adjacency(cls, matrix) -> 'Graph':
        """Builds a graph from a square 0/1 matrix.

        Parameters
        ----------
        matrix : array_like
            Symmetric 0/1 matrix with zero diagonal.
        """

        array = np.asarray(matrix)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError("Adjacency matrix must be square")
        elif not np.isin(array, (0, 1)).all():
            raise ValueError("Adjacency matrix must contain only 0 and 1")

        rows = []
        for i in range(array.shape[0]):
            rows.append(sum(1 << int(j) for j in np.flatnonzero(array[i])))

        return cls.from_rows(rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        pairs = []
        for u, row in enumerate(self._rows):
            pairs.extend((u, v) for v in _bits(row >> (u + 1) << (u + 1)))
        return tuple(pairs)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self._rows)

    def adjacency_matrix(self) -> np.ndarray:
        """Dense float adjacency matrix."""

        matrix = np.zeros((self._n, self._n))
        for u, v in self.edges:
            matrix[u, v] = matrix[v, u] = 1.0
        return matrix

    def complement(self) -> 'Graph':
        full = (1 << self._n) - 1
        rows = [full & ~row & ~(1 << v) for v, row in enumerate(self._rows)]
        return Graph.from_rows(rows)

    def induced_subgraph(self, vertices: Sequence[int]) -> 'Graph':
        """Subgraph induced by ``vertices``, relabelled in the given order."""

        position = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            neighbors = [u for u in _bits(self._rows[v]) if u in position]
            rows.append(sum(1 << position[u] for u in neighbors))
        return Graph.from_rows(rows)

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """Graph where vertex ``v`` is renamed ``permutation[v]``."""

        if sorted(permutation) != list(range(self._n)):
            raise ValueError(
                f"{list(permutation)} is not a permutation of the vertices"
            )

        rows = [0] * self._n
        for v, row in enumerate(self._rows):
            rows[permutation[v]] = sum(1 << permutation[u] for u in _bits(row))
        return Graph.from_rows(rows)

    def remove_vertex(self, v: int) -> 'Graph':
        return self.induced_subgraph([u for u in range(self._n) if u != v])

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> 'Graph':
        """Copy of the graph with ``edges`` added."""

        return Graph(self._n, list(self.edges) + list(edges))

    @classmethod
    def _from_trusted_rows(cls, rows: Sequence[int]) -> 'Graph':
        # Rows built internally from valid graphs; skips the symmetry scan.
        graph = cls.__new__(cls)
        graph._n = len(rows)
        graph._rows = tuple(rows)
        graph._m = sum(row.bit_count() for row in graph._rows) // 2
        return graph

    def show(self, use_unicode: bool = True):
        """Displays the adjacency matrix."""

        _show_object(self, use_unicode=use_unicode)

    def _set_order(self, n: int):
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise TypeError("Number of vertices must be an integer")
        elif not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"Number of vertices must be between 0 and {MAX_VERTICES}")

        self._n = int(n)

    def _set_rows(self, edges: Iterable[tuple[int, int]]):
        rows = [0] * self._n
        duplicate_edges = []
        for edge in edges:
            u, v = (int(x) for x in edge)
            if not (0 <= u < self._n and 0 <= v < self._n):
                raise ValueError(f"Edge {(u, v)} has an endpoint outside the graph")
            elif u == v:
                raise ValueError(f"Loops are not allowed ({u}, {v})")
            elif rows[u] >> v & 1:
                duplicate_edges.append((min(u, v), max(u, v)))
            rows[u] |= 1 << v
            rows[v] |= 1 << u

        self._rows = tuple(rows)
        self._m = sum(row.bit_count() for row in rows) // 2

        if len(duplicate_edges) > 0:
            _show_eigsquares_warning(f"Duplicate edges ({str(duplicate_edges)[1:-1]})")

    def _key(self) -> tuple:
        return (self._n, self._rows)

    def __hash__(self) -> int:
        return hash(self._key())

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        elif isinstance(other, Graph):
            return self._key() == other._key()
        return False

    def __len__(self) -> int:
        return self._n

    def __str__(self) -> str:
        return sstr(self)

    def __repr__(self) -> str:
        return srepr(self)

    def _sympy_(self) -> ImmutableDenseMatrix:
        return ImmutableDenseMatrix(
            self._n, self._n, lambda i, j: int(self.has_edge(int(i), int(j)))
        )

    def _sympyrepr(self, printer) -> str:
        return f'{type(self).__name__}({self._n}, {list(self.edges)})'

    def _sympystr(self, printer) -> str:
        return f'{type(self).__name__}(n={self._n}, m={self._m})'

    def _pretty(self, printer) -> prettyForm:
        return printer._print(self._sympy_())


class ComponentPartition(NamedTuple):
    """Connected components.

    Attributes
    ----------
    labels : tuple[int]
        Component index of every vertex; components are numbered in
        order of their smallest vertex.
    kappa : int
        Number of components.
    """

    labels: tuple[int, ...]
    kappa: int

    def members(self, index: int) -> tuple[int, ...]:
        return tuple(v for v, label in enumerate(self.labels) if label == index)


class DegreeStats(NamedTuple):
    """Minimum degree, maximum degree and degree sequence (vertex order).

    Both extremes are ``None`` for the null graph.
    """

    delta: Optional[int]
    Delta: Optional[int]
    sequence: tuple[int, ...]


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach(rows: Sequence[int], start: int, allowed: int) -> int:
    """Mask of vertices reachable from ``start`` inside ``allowed``."""

    seen = 1 << start
    frontier = seen
    while frontier:
        grown = 0
        for v in _bits(frontier):
            grown |= rows[v]
        frontier = grown & allowed & ~seen
        seen |= frontier
    return seen


def degree_stats(g: Graph) -> DegreeStats:
    """Returns the minimum degree, maximum degree and degree sequence.

    Examples
    --------

    >>> from eigsquares.families import star
    >>> degree_stats(star(5))
    DegreeStats(delta=1, Delta=4, sequence=(4, 1, 1, 1, 1))
    """

    sequence = g.degrees()
    if not sequence:
        return DegreeStats(None, None, ())
    return DegreeStats(min(sequence), max(sequence), sequence)


def components(g: Graph) -> ComponentPartition:
    """Returns the partition of the vertices into connected components."""

    labels = [-1] * g.n
    full = (1 << g.n) - 1
    kappa = 0
    for v in range(g.n):
        if labels[v] < 0:
            for u in _bits(_reach(g.rows, v, full)):
                labels[u] = kappa
            kappa += 1

    return ComponentPartition(tuple(labels), kappa)


def is_connected(g: Graph) -> bool:
    """``True`` iff the graph has exactly one component."""

    if g.n == 0:
        return False
    full = (1 << g.n) - 1
    return _reach(g.rows, 0, full) == full


def is_cut_vertex(g: Graph, v: int) -> bool:
    """``True`` iff removing ``v`` disconnects a connected graph."""

    if g.n <= 2:
        return False
    allowed = ((1 << g.n) - 1) & ~(1 << v)
    start = (allowed & -allowed).bit_length() - 1
    return _reach(g.rows, start, allowed) != allowed


def cyclomatic_number(g: Graph) -> int:
    """Returns the cyclomatic number ``c = m - n + kappa``.

    ``c`` is the least number of edges whose removal leaves a forest,
    hence it is zero exactly for forests.
    """

    return g.m - g.n + components(g).kappa


def is_bipartite(g: Graph) -> bool:
    """``True`` iff the vertices admit a proper 2-coloring."""

    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in _bits(g.rows[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) <= 1


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_odd_cycle(g: Graph) -> bool:
    if g.n < 3 or g.n % 2 == 0 or g.m != g.n:
        return False
    return is_regular(g) and is_connected(g)


def is_star(g: Graph) -> bool:
    """``True`` for ``K_{1, n-1}`` with ``n >= 2``."""

    stats = degree_stats(g)
    return g.n >= 2 and g.m == g.n - 1 and stats.Delta == g.n - 1


def blow_up(g: Graph, multiplicities: Union[Sequence[int], Mapping[int, int]]) -> Graph:
    """Replaces every vertex by an independent set of twins.

    Vertex ``v`` of ``g`` becomes the consecutive block of ``a_v`` new
    vertices starting at ``a_0 + ... + a_{v-1}``; two blocks are
    completely joined iff the original vertices are adjacent.

    Parameters
    ----------
    g : Graph
        The graph to expand.
    multiplicities : Sequence[int] or Mapping[int, int]
        Block size ``a_v >= 1`` for every vertex ``v``.

    Returns
    -------
    expanded : Graph
        Graph with ``sum(a_v)`` vertices and ``sum(a_u * a_v)`` edges,
        the sum running over the edges ``uv`` of ``g``.

    Raises
    ------
    ValueError
        If a multiplicity is missing or smaller than one.

    Examples
    --------

    >>> from eigsquares.families import complete
    >>> blow_up(complete(2), [2, 3]).m
    6
    """

    if isinstance(multiplicities, Mapping):
        sizes = [multiplicities.get(v, 0) for v in range(g.n)]
    else:
        sizes = list(multiplicities)

    if len(sizes) != g.n:
        raise ValueError(f"Expected {g.n} multiplicities, got {len(sizes)}")
    invalid = [
        a for a in sizes if isinstance(a, bool) or not isinstance(a, int) or a < 1
    ]
    if len(invalid) > 0:
        raise ValueError(
            f"Multiplicities must be positive integers ({str(invalid)[1:-1]})"
        )

    starts = [0] + list(accumulate(sizes))[:-1]
    blocks = [((1 << a) - 1) << start for a, start in zip(sizes, starts)]

    rows = []
    for v, a in enumerate(sizes):
        row = 0
        for u in _bits(g.rows[v]):
            row |= blocks[u]
        rows.extend([row] * a)

    return Graph.from_rows(rows)

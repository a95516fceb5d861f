#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Canonical
=========

This module contains the twin quotient of a graph (its canonical graph),
the catalog of the nine canonical graphs with exactly two negative
eigenvalues, and the checks of ``s- >= n - 1`` over their blow-ups.

Two vertices are twins when they are not adjacent and have the same
neighbours. Collapsing every twin class to one vertex gives the
canonical graph ``g`` of ``G``; ``G`` is recovered as the blow-up of
``g`` by the class sizes ``a_v``. Both graphs have the same number of
positive and of negative eigenvalues.

Classes
-------
CanonicalDecomposition
    Canonical graph, class sizes and vertex map.
P2Catalog
    The canonical graphs G1 to G9.
PremiseCheck
    One arithmetic or structural premise of a blow-up argument.
LemmaVerification
    Record of the checks on one blow-up.
SweepReport
    Summary of an exhaustive sweep over catalog blow-ups.

Functions
---------
canonical_graph(g)
    Twin quotient of a graph.
p2_catalog()
    The self-checked catalog.
in_p(g, t), in_q(g, t)
    Connected graphs with exactly ``t`` negative (positive) eigenvalues.
is_complete_multipartite(g), is_complete_bipartite(g)
    Structural characterizations of ``Q(1)`` and ``P(1)``.
verify_lemma_family(i, a)
    Checks one blow-up of a catalog graph.
canonical_min_degree_lemma(h, a)
    Blow-ups of canonical graphs whose minimum degree reaches ``nu``.
theorem_maintwoeigs_sweep(max_n)
    All blow-ups of the catalog up to ``max_n`` vertices.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
import logging
from multiprocessing import Pool
from typing import Iterator, NamedTuple, Optional, Sequence

from sympy import sstr
from tqdm import tqdm

from eigsquares._internal import (
    DEFAULT_TOLERANCES,
    Tolerances,
    CatalogIntegrityError,
    _show_eigsquares_warning,
)
from eigsquares.graph import (
    Graph,
    blow_up,
    degree_stats,
    is_bipartite,
    is_complete,
    is_connected,
)
from eigsquares.graph6 import encode
from eigsquares.spectral import inertia, summarize

logger = logging.getLogger(__name__)

SWEEP_MAX_VERTICES = 14


@dataclass(frozen=True)
class CanonicalDecomposition:
    """Twin quotient of a graph.

    Attributes
    ----------
    quotient : Graph
        The canonical graph; quotient vertex ``i`` is the ``i``-th twin
        class, classes being ordered by their smallest vertex.
    multiplicities : tuple[int]
        Size ``a_i`` of every twin class.
    vertex_map : tuple[int]
        Quotient vertex of every original vertex.
    classes : tuple[tuple[int]]
        Original vertices of every twin class.
    """

    quotient: Graph
    multiplicities: tuple[int, ...]
    vertex_map: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        """``True`` when the graph is its own canonical graph."""

        return all(a == 1 for a in self.multiplicities)

    def expand(self) -> Graph:
        """Blow-up of the quotient, isomorphic to the original graph."""

        return blow_up(self.quotient, self.multiplicities)

    def to_dict(self) -> dict:
        return {
            'quotient': encode(self.quotient),
            'multiplicities': list(self.multiplicities),
            'vertex_map': list(self.vertex_map),
        }

    def __str__(self) -> str:
        return sstr(self)

    __repr__ = __str__

    def _sympystr(self, printer) -> str:
        return (
            f'{type(self).__name__}(quotient={printer._print(self.quotient)}, '
            f'multiplicities={list(self.multiplicities)})'
        )


def canonical_graph(g: Graph) -> CanonicalDecomposition:
    """Twin quotient of a graph.

    Non-adjacent vertices with the same neighbours are exactly the
    vertices with equal adjacency rows, so classes are found by hashing
    the rows.

    Examples
    --------

    >>> from eigsquares.families import complete_bipartite
    >>> canonical_graph(complete_bipartite(3, 4)).multiplicities
    (3, 4)
    """

    class_of_row: dict[int, int] = {}
    vertex_map = []
    classes: list[list[int]] = []
    for v, row in enumerate(g.rows):
        if row not in class_of_row:
            class_of_row[row] = len(classes)
            classes.append([])
        vertex_map.append(class_of_row[row])
        classes[class_of_row[row]].append(v)

    edges = []
    for i, members in enumerate(classes):
        for j in range(i + 1, len(classes)):
            if g.has_edge(members[0], classes[j][0]):
                edges.append((i, j))

    return CanonicalDecomposition(
        quotient=Graph(len(classes), edges),
        multiplicities=tuple(len(members) for members in classes),
        vertex_map=tuple(vertex_map),
        classes=tuple(tuple(members) for members in classes),
    )


def in_p(g: Graph, t: int) -> bool:
    """``True`` for connected graphs with exactly ``t`` negative
    eigenvalues."""

    return is_connected(g) and inertia(g).nu == t


def in_q(g: Graph, t: int) -> bool:
    """``True`` for connected graphs with exactly ``t`` positive
    eigenvalues."""

    return is_connected(g) and inertia(g).pi == t


def is_complete_multipartite(g: Graph) -> bool:
    """``True`` iff the canonical graph is complete."""

    return g.n > 0 and is_complete(canonical_graph(g).quotient)


def is_complete_bipartite(g: Graph) -> bool:
    """``True`` iff the canonical graph is ``K_2``."""

    quotient = canonical_graph(g).quotient
    return quotient.n == 2 and quotient.m == 1


# Vertex labels are the usual 1-based labels shifted down by one. G9 is
# the triangular prism, with Hamiltonian cycle 0-1-4-2-3-5-0.
_CATALOG_EDGES = {
    1: [(0, 1), (1, 2), (0, 2)],
    2: [(0, 1), (1, 2), (2, 3)],
    3: [(0, 1), (1, 2), (0, 2), (2, 3)],
    4: [(0, 1), (1, 2), (2, 3), (3, 4)],
    5: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
    6: [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (2, 4)],
    7: [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)],
    8: [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (2, 4), (4, 5)],
    9: [(0, 1), (1, 4), (4, 2), (2, 3), (3, 5), (5, 0), (0, 4), (2, 5), (1, 3)],
}

# Lower bounds on the pairwise-product sum B of every blow-up, used by the
# edge-count arguments; the true B of the canonical graph is at least as
# large and B never decreases under blow-up.
B_FLOORS = {3: 2.0, 5: 5.0, 6: 2.0, 7: 3.0, 8: 2.0, 9: 7.0}


class P2Catalog:
    """The nine canonical graphs with exactly two negative eigenvalues.

    Graphs are accessed by their 1-based index: ``catalog[1]`` is ``K_3``,
    ``catalog[2]`` is ``P_4``, ``catalog[4]`` is ``P_5`` and
    ``catalog[5]`` is ``C_5``. The others are the paw (3), the house (6),
    the bull (7), the house with a pendant on its roof (8) and the
    triangular prism (9).
    """

    def __init__(self, graphs: Sequence[Graph]):
        self._graphs = tuple(graphs)

    def __getitem__(self, index: int) -> Graph:
        if not 1 <= index <= len(self._graphs):
            raise IndexError(f"Catalog index must be between 1 and {len(self._graphs)}")
        return self._graphs[index - 1]

    def __iter__(self) -> Iterator[Graph]:
        return iter(self._graphs)

    def __len__(self) -> int:
        return len(self._graphs)

    def indices(self) -> range:
        return range(1, len(self._graphs) + 1)

    def pendant_neighbors(self, index: int) -> tuple[int, ...]:
        """Vertices adjacent to a vertex of degree one."""

        g = self[index]
        return tuple(
            v for v in range(g.n) if any(g.degree(u) == 1 for u in g.neighbors(v))
        )

    def __str__(self) -> str:
        return sstr(self)

    __repr__ = __str__

    def _sympystr(self, printer) -> str:
        lines = [f'{type(self).__name__}(']
        for index, g in zip(self.indices(), self._graphs):
            lines.append(f'  G{index}: {list(g.edges)},')
        return '\n'.join(lines) + '\n)'


@lru_cache(maxsize=None)
def p2_catalog() -> P2Catalog:
    """The self-checked catalog.

    Raises
    ------
    CatalogIntegrityError
        If a catalog graph is disconnected, has twins or does not have
        exactly two negative eigenvalues.
    """

    graphs = []
    for index, edges in _CATALOG_EDGES.items():
        g = Graph(max(max(edge) for edge in edges) + 1, edges)
        if not is_connected(g):
            raise CatalogIntegrityError(f"G{index} is not connected")
        elif not canonical_graph(g).is_trivial:
            raise CatalogIntegrityError(f"G{index} has twin vertices")
        elif inertia(g).nu != 2:
            raise CatalogIntegrityError(
                f"G{index} does not have two negative eigenvalues"
            )
        graphs.append(g)

    return P2Catalog(graphs)


class PremiseCheck(NamedTuple):
    """One premise of a blow-up argument.

    ``margin`` is the amount by which an edge-count or B premise is met
    (negative when it fails); structural premises use 0 or -1.
    """

    name: str
    margin: float
    holds: bool


@dataclass(frozen=True)
class LemmaVerification:
    """Checks on one blow-up ``G`` of a canonical graph.

    Attributes
    ----------
    index : int, optional
        Catalog index of the canonical graph, ``None`` outside the catalog.
    multiplicities : tuple[int]
        Class sizes ``a_v``.
    n, m : int
        Order and size of ``G``.
    s_minus, b_value : float
        Spectral quantities of ``G``.
    slack : float
        ``s- - (n - 1)``.
    premises : tuple[PremiseCheck]
        Premises of the arguments that apply to ``G``.
    holds : bool
        ``slack >= -tol``.
    """

    index: Optional[int]
    multiplicities: tuple[int, ...]
    n: int
    m: int
    s_minus: float
    b_value: float
    slack: float
    premises: tuple[PremiseCheck, ...]
    holds: bool

    @property
    def asserted(self) -> bool:
        """``True`` when some argument concludes ``s- >= n - 1``."""

        return any(p.name != 'interlacing' for p in self.premises)

    @property
    def passed(self) -> bool:
        return all(p.holds for p in self.premises) and (self.holds or not self.asserted)

    def to_dict(self) -> dict:
        return {
            'index': self.index,
            'multiplicities': list(self.multiplicities),
            'n': self.n,
            'm': self.m,
            's_minus': self.s_minus,
            'b_value': self.b_value,
            'slack': self.slack,
            'premises': {
                p.name: {'margin': p.margin, 'holds': p.holds} for p in self.premises
            },
            'holds': self.holds,
        }


def _edge_premise(name: str, margin: float) -> PremiseCheck:
    return PremiseCheck(name, float(margin), margin >= 0)


def verify_lemma_family(
    i: int, a: Sequence[int], tolerances: Tolerances = DEFAULT_TOLERANCES
) -> LemmaVerification:
    """Checks ``s- >= n - 1`` on the blow-up of catalog graph ``G_i``.

    The premises recorded, when they apply, are:

    * ``structural``, for ``i`` in 1, 2, 4: the blow-up is complete
      3-partite (``i = 1``) or bipartite.
    * ``min_degree``, when ``delta(G_i) >= 2`` and all ``a_v >= 2``:
      ``m >= 2n``.
    * ``doubled_classes``, for the other indices with all ``a_v >= 2``:
      ``m >= 2n``.
    * ``b_floor``, for ``i`` in 5, 6, 9: ``m >= 2(n - 1) - B0`` with the
      floor ``B0`` of ``B_FLOORS``.
    * ``doubled_pendant_neighbors``, for ``i`` in 3, 7, 8 when every
      vertex adjacent to a pendant vertex has ``a_v >= 2``:
      ``m >= 2(n - 1) - B0``.
    * ``interlacing``, with either B argument: the true ``B`` of the
      blow-up is at least ``B0``.

    Parameters
    ----------
    i : int
        Catalog index, between 1 and 9.
    a : Sequence[int]
        Class size of every vertex of ``G_i``.
    tolerances : Tolerances, default=DEFAULT_TOLERANCES
        ``slack`` tolerance of the conclusion.

    Returns
    -------
    record : LemmaVerification
        ``asserted`` is ``True`` when an argument applies, and then
        ``passed`` requires ``s- >= n - 1``.

    Examples
    --------

    >>> record = verify_lemma_family(5, [1, 2, 2, 2, 2])
    >>> [p.name for p in record.premises], record.passed
    (['b_floor', 'interlacing'], True)
    """

    catalog = p2_catalog()
    h = catalog[i]
    a = tuple(a)
    g = blow_up(h, a)
    s = summarize(g, tolerances)
    n, m = g.n, g.m

    doubled = all(size >= 2 for size in a)
    premises = []
    if i in (1, 2, 4):
        structural = is_complete_multipartite(g) if i == 1 else is_bipartite(g)
        margin = 0.0 if structural else -1.0
        premises.append(PremiseCheck('structural', margin, structural))
    if doubled and degree_stats(h).delta >= 2:
        premises.append(_edge_premise('min_degree', m - 2 * n))
    elif doubled and i not in (1, 2, 4):
        premises.append(_edge_premise('doubled_classes', m - 2 * n))

    floor = B_FLOORS.get(i)
    uses_floor = False
    if i in (5, 6, 9):
        premises.append(_edge_premise('b_floor', m - (2 * (n - 1) - floor)))
        uses_floor = True
    elif i in (3, 7, 8) and all(a[v] >= 2 for v in catalog.pendant_neighbors(i)):
        margin = m - (2 * (n - 1) - floor)
        premises.append(_edge_premise('doubled_pendant_neighbors', margin))
        uses_floor = True
    if uses_floor:
        margin = s.b_value - floor
        holds = margin >= -tolerances.slack
        premises.append(PremiseCheck('interlacing', margin, holds))

    slack = s.s_minus - (n - 1)

    return LemmaVerification(
        index=i,
        multiplicities=a,
        n=n,
        m=m,
        s_minus=s.s_minus,
        b_value=s.b_value,
        slack=slack,
        premises=tuple(premises),
        holds=slack >= -tolerances.slack,
    )


def canonical_min_degree_lemma(
    h: Graph, a: Sequence[int], tolerances: Tolerances = DEFAULT_TOLERANCES
) -> LemmaVerification:
    """Blow-ups of a canonical graph ``h`` in ``P(t)`` with
    ``delta(h) >= t``.

    When every class has ``a_v >= 2``, each edge contributes
    ``a_u a_v >= a_u + a_v``, so ``m >= t n`` and ``s- >= n - 1`` follows
    from ``m >= nu (n - 1)``. The premise ``min_degree`` is recorded only
    when ``delta(h) >= t`` and all ``a_v >= 2``.

    Raises
    ------
    ValueError
        If ``h`` is not a connected canonical graph.
    """

    if not is_connected(h) or not canonical_graph(h).is_trivial:
        raise ValueError("Expected a connected canonical graph")

    a = tuple(a)
    g = blow_up(h, a)
    s = summarize(g, tolerances)
    t = inertia(h, tolerances).nu

    premises = []
    if degree_stats(h).delta >= t and all(size >= 2 for size in a):
        premises.append(_edge_premise('min_degree', g.m - t * g.n))

    slack = s.s_minus - (g.n - 1)

    return LemmaVerification(
        index=None,
        multiplicities=a,
        n=g.n,
        m=g.m,
        s_minus=s.s_minus,
        b_value=s.b_value,
        slack=slack,
        premises=tuple(premises),
        holds=slack >= -tolerances.slack,
    )


@dataclass(frozen=True)
class SweepReport:
    """Summary of a sweep over blow-ups of the catalog.

    Attributes
    ----------
    max_n : int
        Largest number of vertices swept.
    checked : int
        Blow-ups with minimum degree at least 2 (asserted).
    min_slack : float
        Smallest ``s- - (n - 1)`` among the checked blow-ups.
    argmin : tuple[int, tuple[int]], optional
        Catalog index and class sizes attaining ``min_slack``.
    failures : tuple
        ``(index, multiplicities, slack)`` of checked blow-ups with
        negative slack.
    nu_failures : int
        Blow-ups whose number of negative eigenvalues differs from 2.
    degree_one_checked : int
        Blow-ups with a pendant vertex (recorded only).
    degree_one_below : int
        Those among them with negative slack.
    truncated : bool
        ``True`` when ``max_n`` was clamped.
    """

    max_n: int
    checked: int
    min_slack: float
    argmin: Optional[tuple[int, tuple[int, ...]]]
    failures: tuple[tuple[int, tuple[int, ...], float], ...]
    nu_failures: int
    degree_one_checked: int
    degree_one_below: int
    truncated: bool = False

    def to_dict(self) -> dict:
        argmin = None
        if self.argmin is not None:
            argmin = [self.argmin[0], list(self.argmin[1])]
        return {
            'max_n': self.max_n,
            'checked': self.checked,
            'min_slack': self.min_slack,
            'argmin': argmin,
            'failures': [[i, list(a), slack] for i, a, slack in self.failures],
            'nu_failures': self.nu_failures,
            'degree_one_checked': self.degree_one_checked,
            'degree_one_below': self.degree_one_below,
            'truncated': self.truncated,
        }


def _multiplicity_vectors(size: int, total: int) -> Iterator[tuple[int, ...]]:
    """Vectors of ``size`` positive integers with sum at most ``total``."""

    for a in product(range(1, total - size + 2), repeat=size):
        if sum(a) <= total:
            yield a


def _sweep_task(
    task: tuple[int, tuple[int, ...]]
) -> tuple[int, tuple[int, ...], int, int, float]:
    i, a = task
    g = blow_up(p2_catalog()[i], a)
    s = summarize(g)
    return i, a, degree_stats(g).delta, s.inertia.nu, s.s_minus - (g.n - 1)


def theorem_maintwoeigs_sweep(
    max_n: int, jobs: int = 1, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> SweepReport:
    """Checks ``s- >= n - 1`` on every blow-up of the catalog with at most
    ``max_n`` vertices and minimum degree at least 2.

    Blow-ups with a pendant vertex are evaluated and counted but not
    asserted.

    Parameters
    ----------
    max_n : int
        Largest number of vertices; clamped to ``SWEEP_MAX_VERTICES``
        with a warning.
    jobs : int, default=1
        Worker processes.
    tolerances : Tolerances, default=DEFAULT_TOLERANCES
        ``slack`` tolerance.

    Returns
    -------
    report : SweepReport
        Flagged ``truncated`` when ``max_n`` was clamped.
    """

    truncated = max_n > SWEEP_MAX_VERTICES
    if truncated:
        _show_eigsquares_warning(
            f"Sweep limited to {SWEEP_MAX_VERTICES} vertices (requested {max_n})"
        )
        max_n = SWEEP_MAX_VERTICES

    catalog = p2_catalog()
    tasks = [
        (i, a)
        for i in catalog.indices()
        for a in _multiplicity_vectors(catalog[i].n, max_n)
    ]
    logger.info("Sweeping %d blow-ups up to %d vertices", len(tasks), max_n)

    progress = {'total': len(tasks), 'desc': 'blow-ups', 'disable': None}
    if jobs > 1:
        with Pool(jobs) as pool:
            results = list(
                tqdm(pool.imap(_sweep_task, tasks, chunksize=32), **progress)
            )
    else:
        results = [_sweep_task(task) for task in tqdm(tasks, **progress)]

    checked = 0
    min_slack = float('inf')
    argmin = None
    failures = []
    nu_failures = 0
    degree_one_checked = 0
    degree_one_below = 0
    for i, a, delta, nu, slack in results:
        if nu != 2:
            nu_failures += 1
        if delta >= 2:
            checked += 1
            if slack < min_slack:
                min_slack, argmin = slack, (i, a)
            if slack < -tolerances.slack:
                failures.append((i, a, slack))
        else:
            degree_one_checked += 1
            if slack < -tolerances.slack:
                degree_one_below += 1

    return SweepReport(
        max_n=max_n,
        checked=checked,
        min_slack=min_slack,
        argmin=argmin,
        failures=tuple(failures),
        nu_failures=nu_failures,
        degree_one_checked=degree_one_checked,
        degree_one_below=degree_one_below,
        truncated=truncated,
    )

#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Search
======

This module contains the isomorph-free enumeration of small graphs and
the search for graphs with ``min(s-, s+) < n - kappa``.

Graphs on ``n`` vertices are generated from the classes on ``n - 1``
vertices by adding a vertex joined to a subset of the old ones. A child
is kept only when deleting its canonical deletion vertex gives back its
parent's class; the deletion vertex is chosen among the eligible
vertices (non-cut vertices when only connected graphs are generated) of
largest degree, then of largest sorted neighbour degrees, then of
largest canonical label. Every class thus has exactly one parent, and
children of one parent are deduplicated by canonical form.

Classes
-------
SearchConfig
    Search configuration.
SearchRecord
    Result of the search on one graph.
HuntSummary
    Result of a whole search.
ExtremalReport
    Slack distribution of a finished search.

Functions
---------
enumerate_graphs(cfg)
    One graph per isomorphism class.
brute_force_classes(n, connected)
    Canonical forms of all classes, by exhaustive labeled generation.
evaluate_graph(g)
    SearchRecord of one graph.
hunt(cfg)
    Evaluates every graph of a search.
extremal_report(records)
    Slack statistics of a list of records.
"""

import csv
from dataclasses import dataclass, field
import json
import logging
from multiprocessing import Pool
from multiprocessing.pool import Pool as PoolType
import os
from typing import IO, Iterable, Iterator, Optional

import numpy as np
from tqdm import tqdm

from eigsquares._internal import (
    DEFAULT_TOLERANCES,
    Tolerances,
    ColoringBudgetError,
    SearchCapError,
    _format_table,
    _show_eigsquares_warning,
)
from eigsquares.bounds import (
    Status,
    conjecture_slack,
    full_report,
    sufficient_conditions,
)
from eigsquares.graph import (
    Graph,
    _bits,
    components,
    cyclomatic_number,
    is_connected,
    is_cut_vertex,
)
from eigsquares.graph6 import decode, encode
from eigsquares.labeling import canonical_form, canonical_labeling
from eigsquares.spectral import summarize

logger = logging.getLogger(__name__)

ENUMERATION_CAP = 10
FILTERED_CAP = 12
FILTERED_MAX_DEGREE = 4
ORACLE_CAP = 7
JOBS_VARIABLE = 'EIGSQUARES_JOBS'

RECORD_COLUMNS = ('graph6', 'n', 'm', 's_plus', 's_minus', 'slack', 'flags')


def _default_jobs() -> int:
    value = os.environ.get(JOBS_VARIABLE, '1')
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{JOBS_VARIABLE} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class SearchConfig:
    """Search configuration.

    Attributes
    ----------
    n_min, n_max : int
        Range of vertex counts, both included.
    connected : bool
        If ``True`` only connected graphs are generated and the slack
        baseline is ``n - 1``; otherwise it is ``n - kappa``.
    max_degree : int, optional
        Keep only graphs with maximum degree at most this value.
    with_chi : bool
        Compute the exact chromatic number and the bounds that use it.
    check_bounds : bool
        Evaluate the full bound report on every graph.
    jobs : int
        Worker processes; defaults to ``EIGSQUARES_JOBS`` or 1.
    tolerances : Tolerances
        Classification tolerances.
    sink : IO[str], optional
        Text stream receiving one CSV row per graph.
    keep_records : bool
        Keep every record in the summary.

    Raises
    ------
    ValueError
        If the range is empty, ``jobs < 1`` or ``max_degree < 0``.
    SearchCapError
        If ``n_max`` exceeds ``ENUMERATION_CAP``, or ``FILTERED_CAP``
        when ``max_degree <= FILTERED_MAX_DEGREE``.
    """

    n_min: int = 1
    n_max: int = 8
    connected: bool = True
    max_degree: Optional[int] = None
    with_chi: bool = False
    check_bounds: bool = True
    jobs: int = field(default_factory=_default_jobs)
    tolerances: Tolerances = DEFAULT_TOLERANCES
    sink: Optional[IO[str]] = field(default=None, compare=False, repr=False)
    keep_records: bool = True

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"Invalid vertex range {self.n_min}..{self.n_max}")
        elif self.jobs < 1:
            raise ValueError(f"Number of jobs must be at least 1, got {self.jobs}")
        elif self.max_degree is not None and self.max_degree < 0:
            raise ValueError(
                f"Maximum degree must be non-negative, got {self.max_degree}"
            )

        if self.max_degree is not None and self.max_degree <= FILTERED_MAX_DEGREE:
            cap = FILTERED_CAP
        else:
            cap = ENUMERATION_CAP
        if self.n_max > cap:
            raise SearchCapError(
                f"Enumeration up to {self.n_max} vertices exceeds the cap of {cap}"
            )


def _canonical_deletion(
    child: Graph, size: int, connected: bool
) -> Optional[tuple[int, Optional[tuple[int, ...]]]]:
    """Canonical deletion vertex of ``child``, if it can have degree
    ``size``.

    Returns ``None`` when the deletion vertex cannot have the degree of
    the added vertex; otherwise the vertex and, when it was needed to
    break ties, the canonical labeling of ``child``.
    """

    degrees = child.degrees()

    def eligible(v: int) -> bool:
        return not connected or not is_cut_vertex(child, v)

    if any(degrees[v] > size and eligible(v) for v in range(child.n)):
        return None
    tied = [v for v in range(child.n) if degrees[v] == size and eligible(v)]
    if not tied:
        return None

    keys = {v: tuple(sorted(degrees[u] for u in child.neighbors(v))) for v in tied}
    top = max(keys.values())
    candidates = [v for v in tied if keys[v] == top]
    if len(candidates) == 1:
        return candidates[0], None

    labels = canonical_labeling(child)
    return max(candidates, key=lambda v: labels[v]), labels


def _augment(
    parent: Graph, parent_form: bytes, connected: bool, max_degree: Optional[int]
) -> list[bytes]:
    """Canonical forms of the children whose canonical parent is
    ``parent``."""

    n = parent.n
    parent_degrees = sorted(parent.degrees())
    saturated = 0
    if max_degree is not None:
        for v in range(n):
            if parent.degree(v) >= max_degree:
                saturated |= 1 << v

    found: set[bytes] = set()
    for subset in range(1 if connected else 0, 1 << n):
        size = subset.bit_count()
        if subset & saturated or (max_degree is not None and size > max_degree):
            continue

        rows = list(parent.rows)
        for v in _bits(subset):
            rows[v] |= 1 << n
        child = Graph._from_trusted_rows(rows + [subset])
        deletion = _canonical_deletion(child, size, connected)
        if deletion is None:
            continue

        d, labels = deletion
        reduced = child.remove_vertex(d)
        if sorted(reduced.degrees()) != parent_degrees:
            continue
        elif canonical_form(reduced) != parent_form:
            continue
        found.add(canonical_form(child, labels))

    return sorted(found)


def _expand_shard(
    task: tuple[list[bytes], bool, Optional[int]]
) -> list[bytes]:
    forms, connected, max_degree = task
    children = []
    for form in forms:
        children.extend(_augment(decode(form), form, connected, max_degree))
    return children


def _levels(
    cfg: SearchConfig, pool: Optional[PoolType] = None
) -> Iterator[tuple[int, list[bytes]]]:
    """Canonical forms of every class, level by level, from 1 vertex to
    ``cfg.n_max``.

    Parents are dealt to ``cfg.jobs`` shards by index; shard results are
    merged in sorted order, so the output does not depend on ``jobs``.
    """

    level = [canonical_form(Graph(1))]
    yield 1, level

    for n in range(2, cfg.n_max + 1):
        jobs = cfg.jobs
        tasks = [(level[k::jobs], cfg.connected, cfg.max_degree) for k in range(jobs)]
        if pool is not None:
            shards = pool.map(_expand_shard, tasks)
        else:
            shards = [_expand_shard(task) for task in tasks]
        level = sorted(form for shard in shards for form in shard)
        logger.info("Enumerated %d classes on %d vertices", len(level), n)
        yield n, level


def enumerate_graphs(cfg: SearchConfig) -> Iterator[Graph]:
    """One graph per isomorphism class matching the configuration.

    Graphs come in increasing order of ``n`` and, within one ``n``, in
    increasing order of canonical form; every graph is canonically
    labelled.

    Examples
    --------

    >>> sum(1 for _ in enumerate_graphs(SearchConfig(n_min=5, n_max=5, jobs=1)))
    21
    """

    pool = Pool(cfg.jobs) if cfg.jobs > 1 else None
    try:
        for n, level in _levels(cfg, pool):
            if n >= cfg.n_min:
                for form in level:
                    yield decode(form)
    finally:
        if pool is not None:
            pool.close()
            pool.join()


def brute_force_classes(n: int, connected: bool = True) -> list[bytes]:
    """Canonical forms of all classes on ``n`` vertices.

    Every labeled graph whose degrees do not increase along the vertex
    order is generated and deduplicated by canonical form; each class has
    such a labeling.

    Raises
    ------
    SearchCapError
        If ``n`` exceeds ``ORACLE_CAP``.
    """

    if n > ORACLE_CAP:
        raise SearchCapError(
            f"Exhaustive labeled generation is limited to {ORACLE_CAP} vertices"
        )
    elif n < 1:
        raise ValueError(f"Number of vertices must be positive, got {n}")

    pairs = [(u, v) for v in range(n) for u in range(v)]
    forms = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for bit in _bits(mask):
            u, v = pairs[bit]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if any(rows[i].bit_count() < rows[i + 1].bit_count() for i in range(n - 1)):
            continue
        g = Graph._from_trusted_rows(rows)
        if connected and not is_connected(g):
            continue
        forms.add(canonical_form(g))

    return sorted(forms)


@dataclass(frozen=True)
class SearchRecord:
    """Result of the search on one graph.

    Attributes
    ----------
    graph6 : str
        graph6 encoding.
    n, m, kappa, cyclomatic : int
        Order, size, components and cyclomatic number.
    s_plus, s_minus : float
        Sums of squares of the positive and negative eigenvalues.
    slack : float
        ``min(s-, s+) - (n - kappa)``.
    status : str
        ``'violation'`` when ``slack < -tol``, ``'boundary'`` when
        ``|slack| <= tol`` and ``'ok'`` otherwise.
    flags : tuple[str]
        Sufficient conditions whose premise holds.
    failed_bounds : tuple[str]
        Bounds violated on this graph.
    chi : int, optional
        Chromatic number, when computed.
    """

    graph6: str
    n: int
    m: int
    kappa: int
    cyclomatic: int
    s_plus: float
    s_minus: float
    slack: float
    status: str
    flags: tuple[str, ...] = ()
    failed_bounds: tuple[str, ...] = ()
    chi: Optional[int] = None

    def csv_row(self) -> list[str]:
        return [
            self.graph6,
            str(self.n),
            str(self.m),
            repr(self.s_plus),
            repr(self.s_minus),
            repr(self.slack),
            ';'.join(self.flags),
        ]

    def to_dict(self) -> dict:
        return {
            'graph6': self.graph6,
            'n': self.n,
            'm': self.m,
            'kappa': self.kappa,
            'cyclomatic': self.cyclomatic,
            's_plus': self.s_plus,
            's_minus': self.s_minus,
            'slack': self.slack,
            'status': self.status,
            'flags': list(self.flags),
            'failed_bounds': list(self.failed_bounds),
            'chi': self.chi,
        }


def evaluate_graph(
    g: Graph,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    check_bounds: bool = True,
    with_chi: bool = False,
) -> SearchRecord:
    """SearchRecord of one graph.

    Parameters
    ----------
    g : Graph
        The graph.
    tolerances : Tolerances, default=DEFAULT_TOLERANCES
        Classification tolerances.
    check_bounds : bool, default=True
        Evaluate the full bound report and list its violations.
    with_chi : bool, default=False
        Compute the chromatic number; graphs whose coloring search runs
        out of budget are recorded without it.
    """

    from eigsquares.chromatic import chromatic_number

    s = summarize(g, tolerances)
    slack = conjecture_slack(g, s)
    if slack < -tolerances.slack:
        status = 'violation'
    elif slack <= tolerances.slack:
        status = 'boundary'
    else:
        status = 'ok'

    chi = None
    if with_chi:
        try:
            chi = chromatic_number(g).chi
        except ColoringBudgetError as error:
            logger.warning("%s: %s", encode(g), error)

    flags = tuple(
        entry.bound_id
        for entry in sufficient_conditions(g, s, tolerances)
        if entry.bound_id != 'brualdi' and entry.status is not Status.INAPPLICABLE
    )
    failed: tuple[str, ...] = ()
    if check_bounds:
        report = full_report(g, s, chi, tolerances)
        failed = tuple(entry.bound_id for entry in report.violations())

    return SearchRecord(
        graph6=encode(g),
        n=g.n,
        m=g.m,
        kappa=components(g).kappa,
        cyclomatic=cyclomatic_number(g),
        s_plus=s.s_plus,
        s_minus=s.s_minus,
        slack=slack,
        status=status,
        flags=flags,
        failed_bounds=failed,
        chi=chi,
    )


def _evaluate_task(task: tuple[str, Tolerances, bool, bool]) -> SearchRecord:
    text, tolerances, check_bounds, with_chi = task
    return evaluate_graph(decode(text), tolerances, check_bounds, with_chi)


@dataclass(frozen=True)
class HuntSummary:
    """Result of a whole search.

    Attributes
    ----------
    graphs : int
        Number of graphs evaluated.
    per_n : dict[int, int]
        Number of graphs per vertex count.
    min_slack : float, optional
        Smallest slack, ``None`` when nothing was evaluated.
    argmin : str, optional
        graph6 of a graph attaining ``min_slack``.
    violations : tuple[SearchRecord]
        Records with ``slack < -tol``.
    bound_failures : dict[str, int]
        Number of graphs violating each bound.
    boundary : int
        Records with ``|slack| <= tol``.
    trees_at_zero, complete_at_zero : int
        Boundary records that are trees or complete graphs.
    per_cyclomatic : dict[int, tuple[int, float]]
        Number of graphs and smallest slack per cyclomatic number.
    truncated : bool
        ``True`` when the search was interrupted.
    records : tuple[SearchRecord]
        Every record, when ``keep_records`` is set.
    """

    graphs: int
    per_n: dict[int, int]
    min_slack: Optional[float]
    argmin: Optional[str]
    violations: tuple[SearchRecord, ...]
    bound_failures: dict[str, int]
    boundary: int
    trees_at_zero: int
    complete_at_zero: int
    per_cyclomatic: dict[int, tuple[int, float]]
    truncated: bool = False
    records: tuple[SearchRecord, ...] = field(default=(), repr=False)

    @property
    def found_violations(self) -> bool:
        return len(self.violations) > 0 or len(self.bound_failures) > 0

    def to_dict(self) -> dict:
        return {
            'graphs': self.graphs,
            'per_n': {str(n): count for n, count in sorted(self.per_n.items())},
            'min_slack': self.min_slack,
            'argmin': self.argmin,
            'violations': [record.to_dict() for record in self.violations],
            'bound_failures': dict(sorted(self.bound_failures.items())),
            'boundary': self.boundary,
            'trees_at_zero': self.trees_at_zero,
            'complete_at_zero': self.complete_at_zero,
            'per_cyclomatic': {
                str(c): {'count': count, 'min_slack': slack}
                for c, (count, slack) in sorted(self.per_cyclomatic.items())
            },
            'truncated': self.truncated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


class _HuntAccumulator:
    def __init__(self):
        self.graphs = 0
        self.per_n: dict[int, int] = {}
        self.min_slack: Optional[float] = None
        self.argmin: Optional[str] = None
        self.violations: list[SearchRecord] = []
        self.bound_failures: dict[str, int] = {}
        self.boundary = 0
        self.trees_at_zero = 0
        self.complete_at_zero = 0
        self.per_cyclomatic: dict[int, tuple[int, float]] = {}
        self.records: list[SearchRecord] = []

    def add(self, record: SearchRecord, keep: bool):
        self.graphs += 1
        self.per_n[record.n] = self.per_n.get(record.n, 0) + 1
        if self.min_slack is None or record.slack < self.min_slack:
            self.min_slack, self.argmin = record.slack, record.graph6

        if record.status == 'violation':
            self.violations.append(record)
        elif record.status == 'boundary':
            self.boundary += 1
            if record.kappa == 1 and record.cyclomatic == 0:
                self.trees_at_zero += 1
            elif record.m == record.n * (record.n - 1) // 2:
                self.complete_at_zero += 1

        for bound_id in record.failed_bounds:
            self.bound_failures[bound_id] = self.bound_failures.get(bound_id, 0) + 1

        count, slack = self.per_cyclomatic.get(record.cyclomatic, (0, record.slack))
        self.per_cyclomatic[record.cyclomatic] = (count + 1, min(slack, record.slack))

        if keep:
            self.records.append(record)

    def summary(self, truncated: bool) -> HuntSummary:
        return HuntSummary(
            graphs=self.graphs,
            per_n=self.per_n,
            min_slack=self.min_slack,
            argmin=self.argmin,
            violations=tuple(self.violations),
            bound_failures=self.bound_failures,
            boundary=self.boundary,
            trees_at_zero=self.trees_at_zero,
            complete_at_zero=self.complete_at_zero,
            per_cyclomatic=self.per_cyclomatic,
            truncated=truncated,
            records=tuple(self.records),
        )


def _batches(
    graphs: Iterable[Graph], size: int = 1024
) -> Iterator[tuple[str, list[str]]]:
    batch: list[str] = []
    for g in graphs:
        batch.append(encode(g))
        if len(batch) == size:
            yield 'input', batch
            batch = []
    if batch:
        yield 'input', batch


def hunt(cfg: SearchConfig, graphs: Optional[Iterable[Graph]] = None) -> HuntSummary:
    """Evaluates every graph of a search.

    Parameters
    ----------
    cfg : SearchConfig
        Search configuration.
    graphs : Iterable[Graph], optional
        Graphs to evaluate instead of the enumeration, e.g. read from a
        graph6 stream.

    Returns
    -------
    summary : HuntSummary
        A violation is a finding and never raises. An interrupted search
        returns the records gathered so far with ``truncated`` set.
    """

    accumulator = _HuntAccumulator()
    writer = None
    if cfg.sink is not None:
        writer = csv.writer(cfg.sink, lineterminator='\n')
        writer.writerow(RECORD_COLUMNS)

    pool = Pool(cfg.jobs) if cfg.jobs > 1 else None
    truncated = False
    try:
        if graphs is None:
            source = (
                (f'n={n}', [form.decode('ascii') for form in level])
                for n, level in _levels(cfg, pool)
                if n >= cfg.n_min
            )
        else:
            source = _batches(graphs)

        for label, batch in source:
            tasks = [
                (text, cfg.tolerances, cfg.check_bounds, cfg.with_chi) for text in batch
            ]
            if pool is not None:
                results = pool.imap(_evaluate_task, tasks, chunksize=16)
            else:
                results = map(_evaluate_task, tasks)
            for record in tqdm(results, total=len(tasks), desc=label, disable=None):
                accumulator.add(record, cfg.keep_records)
                if writer is not None:
                    writer.writerow(record.csv_row())
                if record.status == 'violation':
                    logger.warning(
                        "Violation: %s (slack %.3e)", record.graph6, record.slack
                    )
    except KeyboardInterrupt:
        truncated = True
        _show_eigsquares_warning(
            f"Search interrupted after {accumulator.graphs} graphs, "
            "partial results kept"
        )
    finally:
        if pool is not None:
            if truncated:
                pool.terminate()
            else:
                pool.close()
            pool.join()
        if cfg.sink is not None:
            if truncated:
                cfg.sink.write('# truncated\n')
            cfg.sink.flush()

    summary = accumulator.summary(truncated)
    logger.info(
        "Checked %d graphs, %d violations, min slack %s",
        summary.graphs,
        len(summary.violations),
        summary.min_slack,
    )
    return summary


@dataclass(frozen=True)
class ExtremalReport:
    """Slack distribution of a list of records.

    Attributes
    ----------
    histogram : tuple[tuple[float, float, int]]
        ``(low, high, count)`` of every bin.
    smallest : tuple[SearchRecord]
        Records of smallest slack, ties broken by ``n`` then graph6.
    per_n : dict[int, tuple[float, str]]
        Smallest slack and a graph attaining it, per vertex count.
    per_cyclomatic : dict[int, tuple[int, float]]
        Number of records and smallest slack per cyclomatic number.
    """

    histogram: tuple[tuple[float, float, int], ...]
    smallest: tuple[SearchRecord, ...]
    per_n: dict[int, tuple[float, str]]
    per_cyclomatic: dict[int, tuple[int, float]]

    def to_dict(self) -> dict:
        return {
            'histogram': [list(bin_) for bin_ in self.histogram],
            'smallest': [[r.graph6, r.n, r.slack] for r in self.smallest],
            'per_n': {str(n): list(value) for n, value in sorted(self.per_n.items())},
            'per_cyclomatic': {
                str(c): list(value) for c, value in sorted(self.per_cyclomatic.items())
            },
        }

    def to_table(self) -> str:
        sections = [
            _format_table(
                ['low', 'high', 'count'],
                [
                    [f'{low:.6f}', f'{high:.6f}', str(count)]
                    for low, high, count in self.histogram
                ],
            ),
            _format_table(
                ['graph6', 'n', 'slack'],
                [[r.graph6, str(r.n), f'{r.slack:.6f}'] for r in self.smallest],
            ),
            _format_table(
                ['n', 'min slack', 'graph6'],
                [
                    [str(n), f'{slack:.6f}', text]
                    for n, (slack, text) in sorted(self.per_n.items())
                ],
            ),
            _format_table(
                ['c', 'count', 'min slack'],
                [
                    [str(c), str(count), f'{slack:.6f}']
                    for c, (count, slack) in sorted(self.per_cyclomatic.items())
                ],
            ),
        ]
        return '\n\n'.join(sections)


def extremal_report(
    records: Iterable[SearchRecord], bins: int = 10, smallest: int = 20
) -> ExtremalReport:
    """Slack histogram, smallest-slack graphs and per-n minima.

    An empty record list gives an empty report.
    """

    records = list(records)
    if not records:
        return ExtremalReport((), (), {}, {})

    slacks = np.array([record.slack for record in records])
    counts, edges = np.histogram(slacks, bins=bins)
    histogram = tuple(
        (float(edges[k]), float(edges[k + 1]), int(counts[k]))
        for k in range(len(counts))
    )

    ordered = sorted(records, key=lambda r: (r.slack, r.n, r.graph6))

    per_n: dict[int, tuple[float, str]] = {}
    per_cyclomatic: dict[int, tuple[int, float]] = {}
    for record in ordered:
        per_n.setdefault(record.n, (record.slack, record.graph6))
        count, slack = per_cyclomatic.get(record.cyclomatic, (0, record.slack))
        per_cyclomatic[record.cyclomatic] = (count + 1, min(slack, record.slack))

    return ExtremalReport(histogram, tuple(ordered[:smallest]), per_n, per_cyclomatic)

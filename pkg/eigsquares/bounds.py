#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Bounds
======

This module evaluates spectral inequalities, identities and sufficient
conditions for ``min(s-, s+) >= n - 1`` on one graph.

Every evaluation produces a BoundEntry comparing a left-hand value with
a right-hand value (the bound holds when ``left <= right``), with one of
three outcomes: satisfied, violated or inapplicable.

Classes
-------
Status
    Outcome of one bound.
BoundEntry
    One evaluated bound.
BoundsReport
    All bounds evaluated on one graph.

Functions
---------
hong_bound(g, s), nikiforov_bound(g, s)
    Spectral radius bounds.
conjecture_slack(g, s), conjecture_entry(g, s)
    Slack of ``min(s-, s+) >= n - kappa``.
smax_quarter_bound(g, s), constantine_bound(g, s)
    Upper bounds on ``s-`` and on ``mu_n^2``.
cyclomatic_window(g, s)
    ``m - c <= s-, s+ <= m + c``.
energy_lemmas(g, s)
    Energy upper and lower bounds on ``s-`` and ``s+``.
sufficient_conditions(g, s)
    Premises implying ``s- >= n - 1`` or ``s+ >= n - 1``.
ando_lin_check(g, s, chi)
    Chromatic lower bounds.
full_report(g)
    Every applicable bound.
"""

import csv
from dataclasses import dataclass
from enum import Enum
import io
import json
from math import ceil, floor, sqrt
from typing import Optional

from sympy import sstr
from sympy.printing.pretty.stringpict import prettyForm

from eigsquares._internal import (
    DEFAULT_TOLERANCES,
    Tolerances,
    _format_table,
    _show_object,
)
from eigsquares.graph import Graph, components, cyclomatic_number, degree_stats
from eigsquares.graph6 import encode
from eigsquares.spectral import SpectralSummary, summarize

BOUND_IDS = (
    'hong',
    'nikiforov',
    'conjecture',
    'smax_quarter',
    'constantine',
    'cyclomatic_window',
    'energy_tau',
    'energy_mu1',
    'energy_cs_nu',
    'energy_cs_pi',
    'brualdi',
    'lemma_nu',
    'lemma_pi',
    'improved_nu',
    'improved_pi',
    'hyper_energetic',
    'energy_2n_minus_3',
    'ando_lin_plus',
    'ando_lin_minus',
    'edwards_elphick',
    'brooks',
    'regular_chain',
    'barbell_closed_form',
)

BOUND_DESCRIPTIONS = {
    'hong': "mu_1^2 <= 2m - n + 1 (no isolated vertices)",
    'nikiforov': "mu_1 <= (delta - 1)/2 + sqrt(2m - n delta + (1 + delta)^2/4)",
    'conjecture': "n - kappa <= min(s-, s+)",
    'smax_quarter': "s- <= n^2/4",
    'constantine': "mu_n^2 <= floor(n/2) ceil(n/2)",
    'cyclomatic_window': "|s- - m| = |s+ - m| <= c",
    'energy_tau': "s- <= tau E/2",
    'energy_mu1': "s+ <= mu_1 E/2",
    'energy_cs_nu': "E^2/(4 nu) <= s-",
    'energy_cs_pi': "E^2/(4 pi) <= s+",
    'brualdi': "2 sqrt(m) <= E",
    'lemma_nu': "m >= nu (n - 1) implies n - 1 <= s-",
    'lemma_pi': "m >= pi (n - 1) implies n - 1 <= s+",
    'improved_nu': "m >= nu (n - 1) - B implies n - 1 <= s-",
    'improved_pi': "m >= pi (n - 1) - B implies n - 1 <= s+",
    'hyper_energetic': "E > 2(n - 1) implies n - 1 < min(s-, s+)",
    'energy_2n_minus_3': "E >= 2n - 3 implies n - 1 <= min(s-, s+)",
    'ando_lin_plus': "1 + s+/s- <= chi",
    'ando_lin_minus': "1 + s-/s+ <= chi",
    'edwards_elphick': "2m/(2m - mu_1^2) <= chi",
    'brooks': "chi <= Delta (connected, neither complete nor odd cycle)",
    'regular_chain': (
        "n <= 2m/chi <= s- (connected regular, not complete nor odd cycle)"
    ),
    'barbell_closed_form': "barbell spectrum deviation from its closed form <= 1e-8",
}


class Status(Enum):
    SATISFIED = 'satisfied'
    VIOLATED = 'violated'
    INAPPLICABLE = 'inapplicable'


@dataclass(frozen=True)
class BoundEntry:
    """One evaluated bound ``left <= right``.

    Attributes
    ----------
    bound_id : str
        One of ``BOUND_IDS``.
    left, right : float, optional
        Compared values; ``None`` when the bound is inapplicable.
    status : Status
        Outcome.
    equality : bool
        ``True`` when both sides agree within the equality band.
    reason : str
        Why the bound is inapplicable, or violated.
    """

    bound_id: str
    left: Optional[float]
    right: Optional[float]
    status: Status
    equality: bool = False
    reason: str = ''

    @property
    def margin(self) -> Optional[float]:
        if self.left is None or self.right is None:
            return None
        return self.right - self.left

    def to_dict(self) -> dict:
        return {
            'left': self.left,
            'right': self.right,
            'status': self.status.value,
            'equality': self.equality,
            'reason': self.reason,
        }


def _compare(
    bound_id: str,
    left: float,
    right: float,
    tolerances: Tolerances,
    absolute: Optional[float] = None,
    strict: bool = False,
) -> BoundEntry:
    """Classifies ``left <= right``, or ``left < right`` when ``strict``.

    The comparison tolerance is relative to ``max(1, |left|, |right|)``
    unless an ``absolute`` one is given. A strict comparison only holds
    when ``right - left`` exceeds the tolerance.
    """

    left, right = float(left), float(right)
    if absolute is None:
        tol = tolerances.band('compare', left, right)
    else:
        tol = absolute
    equality = abs(left - right) <= max(tol, tolerances.band('equality', left, right))

    if strict and right - left > tol:
        return BoundEntry(bound_id, left, right, Status.SATISFIED, equality)
    elif not strict and left <= right + tol:
        return BoundEntry(bound_id, left, right, Status.SATISFIED, equality)
    elif strict:
        reason = f"margin {right - left:.3e} is not strictly positive"
    else:
        reason = f"exceeds by {left - right:.3e}"
    return BoundEntry(bound_id, left, right, Status.VIOLATED, equality, reason)


def _inapplicable(bound_id: str, reason: str) -> BoundEntry:
    return BoundEntry(bound_id, None, None, Status.INAPPLICABLE, False, reason)


def _implication(
    bound_id: str,
    premise: bool,
    premise_text: str,
    left: float,
    right: float,
    tolerances: Tolerances,
    strict: bool = False,
) -> BoundEntry:
    if not premise:
        return _inapplicable(bound_id, f"premise {premise_text} fails")
    return _compare(bound_id, left, right, tolerances, strict=strict)


def hong_bound(
    g: Graph, s: SpectralSummary, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> BoundEntry:
    """``mu_1^2 <= 2m - n + 1``, for graphs without isolated vertices.

    Equality holds exactly for complete graphs and stars.
    """

    if g.n == 0 or degree_stats(g).delta == 0:
        return _inapplicable('hong', "requires no isolated vertices")
    return _compare('hong', s.spectral_radius**2, 2 * g.m - g.n + 1, tolerances)


def nikiforov_bound(
    g: Graph, s: SpectralSummary, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> BoundEntry:
    """``mu_1 <= (delta - 1)/2 + sqrt(2m - n delta + (1 + delta)^2/4)``,
    exact for regular graphs."""

    if g.n == 0:
        return _inapplicable('nikiforov', "requires n >= 1")

    delta = degree_stats(g).delta
    right = (delta - 1) / 2 + sqrt(2 * g.m - g.n * delta + (1 + delta) ** 2 / 4)
    return _compare('nikiforov', s.spectral_radius, right, tolerances)


def conjecture_slack(g: Graph, s: SpectralSummary) -> float:
    """Returns ``min(s-, s+) - (n - kappa)``.

    For connected graphs the baseline is ``n - 1``. A negative value
    marks a counterexample candidate.

    Examples
    --------

    >>> from eigsquares.families import complete, disjoint_union
    >>> from eigsquares.spectral import summarize
    >>> two_k4 = disjoint_union(complete(4), complete(4))
    >>> abs(conjecture_slack(two_k4, summarize(two_k4))) < 1e-9
    True
    """

    if g.n == 0:
        return 0.0
    return min(s.s_minus, s.s_plus) - (g.n - components(g).kappa)


def conjecture_entry(
    g: Graph, s: SpectralSummary, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> BoundEntry:
    """``n - kappa <= min(s-, s+)`` with the absolute slack tolerance."""

    baseline = g.n - components(g).kappa
    smallest = min(s.s_minus, s.s_plus)
    return _compare(
        'conjecture', baseline, smallest, tolerances, absolute=tolerances.slack
    )


def smax_quarter_bound(
    g: Graph, s: SpectralSummary, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> BoundEntry:
    """``s- <= n^2/4``, attained by regular complete bipartite graphs."""

    return _compare('smax_quarter', s.s_minus, g.n**2 / 4, tolerances)


def constantine_bound(
    g: Graph, s: SpectralSummary, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> BoundEntry:
    """``mu_n^2 <= floor(n/2) ceil(n/2)``."""

    if g.n == 0:
        return _inapplicable('constantine', "requires n >= 1")
    return _compare('constantine', s.tau**2, floor(g.n / 2) * ceil(g.n / 2), tolerances)


def cyclomatic_window(
    g: Graph, s: SpectralSummary, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> BoundEntry:
    """Both ``s-`` and ``s+`` lie in ``[m - c, m + c]``.

    Since ``s- + s+ = 2m`` both distances to ``m`` coincide, so the entry
    compares ``max(|s- - m|, |s+ - m|)`` with ``c``. For forests the
    window collapses to ``{m}``.
    """

    left = max(abs(s.s_minus - g.m), abs(s.s_plus - g.m))
    return _compare('cyclomatic_window', left, cyclomatic_number(g), tolerances)


def energy_lemmas(
    g: Graph, s: SpectralSummary, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> list[BoundEntry]:
    """Energy bounds ``E^2/(4 nu) <= s- <= tau E/2`` and
    ``E^2/(4 pi) <= s+ <= mu_1 E/2``.

    The lower bounds follow from Cauchy-Schwarz on the negative
    (positive) eigenvalues, whose absolute sum is ``E/2``.
    """

    ids = ('energy_tau', 'energy_mu1', 'energy_cs_nu', 'energy_cs_pi')
    if g.m == 0:
        return [_inapplicable(id_, "requires at least one edge") for id_ in ids]

    pi, nu, _ = s.inertia
    energy = s.energy
    return [
        _compare('energy_tau', s.s_minus, s.tau * energy / 2, tolerances),
        _compare('energy_mu1', s.s_plus, s.spectral_radius * energy / 2, tolerances),
        _compare('energy_cs_nu', energy**2 / (4 * nu), s.s_minus, tolerances),
        _compare('energy_cs_pi', energy**2 / (4 * pi), s.s_plus, tolerances),
    ]


def sufficient_conditions(
    g: Graph, s: SpectralSummary, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> list[BoundEntry]:
    """Sufficient conditions for ``s- >= n - 1`` or ``s+ >= n - 1``.

    Each entry is an implication: when the premise fails the entry is
    inapplicable, otherwise its conclusion is compared.

    Returns
    -------
    entries : list[BoundEntry]
        ``brualdi`` (``E >= 2 sqrt(m)``), ``lemma_nu``, ``lemma_pi``,
        ``improved_nu``, ``improved_pi``, ``hyper_energetic`` and
        ``energy_2n_minus_3``.

    Examples
    --------

    >>> from eigsquares.families import complete_q_partite
    >>> from eigsquares.spectral import summarize
    >>> g = complete_q_partite([2, 2, 2])
    >>> entries = sufficient_conditions(g, summarize(g))
    >>> [e.bound_id for e in entries if e.status is Status.SATISFIED]
    ['brualdi', 'lemma_nu', 'lemma_pi', 'improved_nu', 'improved_pi']
    """

    n, m = g.n, g.m
    pi, nu, _ = s.inertia
    energy, b = s.energy, s.b_value
    smallest = min(s.s_minus, s.s_plus)

    def holds(left: float, right: float, strict: bool = False) -> bool:
        band = tolerances.band('compare', left, right)
        return left > right + band if strict else left >= right - band

    if m == 0:
        brualdi = _inapplicable('brualdi', "requires at least one edge")
    else:
        brualdi = _compare('brualdi', 2 * sqrt(m), energy, tolerances)

    lemma_nu = nu >= 1 and holds(m, nu * (n - 1))
    lemma_pi = pi >= 1 and holds(m, pi * (n - 1))
    improved_nu = nu >= 1 and holds(m, nu * (n - 1) - b)
    improved_pi = pi >= 1 and holds(m, pi * (n - 1) - b)
    hyper = holds(energy, 2 * (n - 1), strict=True)
    energetic = n >= 1 and holds(energy, 2 * n - 3)

    return [
        brualdi,
        _implication(
            'lemma_nu', lemma_nu, "m >= nu (n - 1)", n - 1, s.s_minus, tolerances
        ),
        _implication(
            'lemma_pi', lemma_pi, "m >= pi (n - 1)", n - 1, s.s_plus, tolerances
        ),
        _implication(
            'improved_nu', improved_nu, "m >= nu (n - 1) - B",
            n - 1, s.s_minus, tolerances,
        ),
        _implication(
            'improved_pi', improved_pi, "m >= pi (n - 1) - B",
            n - 1, s.s_plus, tolerances,
        ),
        _implication(
            'hyper_energetic', hyper, "E > 2(n - 1)",
            n - 1, smallest, tolerances, strict=True,
        ),
        _implication(
            'energy_2n_minus_3', energetic, "E >= 2n - 3", n - 1, smallest, tolerances
        ),
    ]


def ando_lin_check(
    g: Graph, s: SpectralSummary, chi: int, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> list[BoundEntry]:
    """Chromatic lower bounds ``1 + s+/s- <= chi``, ``1 + s-/s+ <= chi``
    and ``2m/(2m - mu_1^2) <= chi``.

    Parameters
    ----------
    g : Graph
        The graph.
    s : SpectralSummary
        Its spectral summary.
    chi : int
        Exact chromatic number of ``g``.
    """

    ids = ('ando_lin_plus', 'ando_lin_minus', 'edwards_elphick')
    if g.m == 0:
        return [_inapplicable(id_, "requires at least one edge") for id_ in ids]

    mu_1 = s.spectral_radius
    return [
        _compare('ando_lin_plus', 1 + s.s_plus / s.s_minus, chi, tolerances),
        _compare('ando_lin_minus', 1 + s.s_minus / s.s_plus, chi, tolerances),
        _compare('edwards_elphick', 2 * g.m / (2 * g.m - mu_1**2), chi, tolerances),
    ]


def _barbell_entry(
    g: Graph, s: SpectralSummary, tolerances: Tolerances
) -> Optional[BoundEntry]:
    """Closed-form check when ``g`` is isomorphic to a barbell."""

    from eigsquares.families import barbell, barbell_predicted_spectrum
    from eigsquares.labeling import are_isomorphic

    k = g.n // 2
    if g.n % 2 or k < 3 or g.m != k * (k - 1) + 1 or not are_isomorphic(g, barbell(k)):
        return None

    deviation = barbell_predicted_spectrum(k).deviation(s.eigenvalues)
    return _compare('barbell_closed_form', deviation, 1e-8, tolerances, absolute=0.0)


@dataclass(frozen=True)
class BoundsReport:
    """Every applicable bound evaluated on one graph.

    Attributes
    ----------
    graph6 : str
        graph6 encoding of the graph.
    n, m : int
        Order and size.
    entries : tuple[BoundEntry]
        Evaluated bounds, at most one per bound id, in ``BOUND_IDS``
        order.
    """

    graph6: str
    n: int
    m: int
    entries: tuple[BoundEntry, ...]

    def __getitem__(self, bound_id: str) -> BoundEntry:
        for entry in self.entries:
            if entry.bound_id == bound_id:
                return entry
        raise KeyError(bound_id)

    def __contains__(self, bound_id: str) -> bool:
        return any(entry.bound_id == bound_id for entry in self.entries)

    def violations(self) -> list[BoundEntry]:
        return [entry for entry in self.entries if entry.status is Status.VIOLATED]

    def to_dict(self) -> dict:
        return {
            'graph6': self.graph6,
            'n': self.n,
            'm': self.m,
            'bounds': {entry.bound_id: entry.to_dict() for entry in self.entries},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def csv_header() -> list[str]:
        header = ['graph6', 'n', 'm']
        for bound_id in BOUND_IDS:
            header.extend([f'{bound_id}_margin', f'{bound_id}_status'])
        return header

    def csv_row(self) -> list[str]:
        """One CSV row: margin ``right - left`` and status per bound, empty
        cells for bounds absent from the report."""

        row = [self.graph6, str(self.n), str(self.m)]
        for bound_id in BOUND_IDS:
            if bound_id in self:
                entry = self[bound_id]
                margin = entry.margin
                row.extend(['' if margin is None else repr(margin), entry.status.value])
            else:
                row.extend(['', ''])
        return row

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(self.csv_header())
        writer.writerow(self.csv_row())
        return buffer.getvalue()

    def to_table(self) -> str:
        rows = []
        for entry in self.entries:
            left = '' if entry.left is None else f'{entry.left:.6f}'
            right = '' if entry.right is None else f'{entry.right:.6f}'
            equality = 'yes' if entry.equality else ''
            rows.append([entry.bound_id, left, right, entry.status.value, equality])
        return _format_table(['bound', 'left', 'right', 'status', 'equality'], rows)

    def show(self, use_unicode: bool = True):
        _show_object(self, use_unicode=use_unicode)

    def __str__(self) -> str:
        return sstr(self)

    __repr__ = __str__

    def _sympystr(self, printer) -> str:
        name = type(self).__name__
        header = f'{name}(graph6={self.graph6!r}, n={self.n}, m={self.m})'
        return header + '\n' + self.to_table()

    def _pretty(self, printer) -> prettyForm:
        return prettyForm(self._sympystr(printer))


def full_report(
    g: Graph,
    summary: Optional[SpectralSummary] = None,
    chi: Optional[int] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> BoundsReport:
    """Evaluates every applicable bound on one graph.

    Parameters
    ----------
    g : Graph
        The graph.
    summary : SpectralSummary, optional
        Precomputed spectral summary of ``g``.
    chi : int, optional
        Exact chromatic number. When given, the chromatic bounds (Ando-Lin,
        Edwards-Elphick, Brooks and the regular-graph chain) are added.
    tolerances : Tolerances, default=DEFAULT_TOLERANCES
        Classification tolerances.

    Returns
    -------
    report : BoundsReport
        Empty for the null graph. A ``barbell_closed_form`` entry is
        added when ``g`` is a barbell.
    """

    if g.n == 0:
        return BoundsReport(encode(g), 0, 0, ())

    s = summarize(g, tolerances) if summary is None else summary

    entries = [
        hong_bound(g, s, tolerances),
        nikiforov_bound(g, s, tolerances),
        conjecture_entry(g, s, tolerances),
        smax_quarter_bound(g, s, tolerances),
        constantine_bound(g, s, tolerances),
        cyclomatic_window(g, s, tolerances),
    ]
    entries.extend(energy_lemmas(g, s, tolerances))
    entries.extend(sufficient_conditions(g, s, tolerances))

    if chi is not None:
        from eigsquares.chromatic import brooks_check, regular_chain_check

        entries.extend(ando_lin_check(g, s, chi, tolerances))
        entries.append(brooks_check(g, chi, tolerances))
        entries.append(regular_chain_check(g, s, chi, tolerances))

    barbell_entry = _barbell_entry(g, s, tolerances)
    if barbell_entry is not None:
        entries.append(barbell_entry)

    return BoundsReport(encode(g), g.n, g.m, tuple(entries))

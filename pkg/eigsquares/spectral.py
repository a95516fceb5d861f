#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Spectral
========

This module contains the eigensolver and the spectral quantities of a
graph: inertia, the sums of squares of the positive and negative
eigenvalues, the energy and the pairwise-product sum ``B``.

Classes
-------
Inertia
    Counts of positive, negative and zero eigenvalues.
SpectralSummary
    All spectral quantities of one graph.

Functions
---------
jacobi_eigh(matrix, tolerances)
    Cyclic Jacobi eigensolver for dense symmetric matrices.
eigenvalues(g)
    Adjacency eigenvalues in descending order.
exact_rank(g)
    Rank of the adjacency matrix by fraction-free integer elimination.
inertia(g)
    Inertia of the adjacency matrix.
summarize(g)
    Builds the SpectralSummary of a graph.
b_value(summary)
    Pairwise-product sum ``B`` of a summary.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from sympy import sstr
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from eigsquares._internal import (
    DEFAULT_TOLERANCES,
    Tolerances,
    EigenSolverError,
    InertiaMismatchError,
    _show_eigsquares_warning,
)
from eigsquares.graph import Graph


def jacobi_eigh(
    matrix: np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> tuple[np.ndarray, np.ndarray, int]:
    """Cyclic Jacobi eigensolver for dense symmetric matrices.

    Every sweep annihilates each off-diagonal pair ``(p, q)`` once, in
    row order. The iteration stops when the off-diagonal Frobenius norm
    drops below ``tolerances.jacobi_offdiag`` times the Frobenius norm
    of the input.

    Parameters
    ----------
    matrix : np.ndarray
        Real symmetric square matrix.
    tolerances : Tolerances, default=DEFAULT_TOLERANCES
        Source of the termination threshold and of the sweep cap.

    Returns
    -------
    values : np.ndarray
        Eigenvalues, in no particular order.
    vectors : np.ndarray
        Orthonormal eigenvectors, one per column.
    sweeps : int
        Number of completed sweeps.

    Raises
    ------
    EigenSolverError
        If the sweep cap is reached before convergence.
    """

    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    threshold = tolerances.jacobi_offdiag * np.linalg.norm(a)

    for sweep in range(tolerances.jacobi_max_sweeps + 1):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= threshold:
            return np.diag(a).copy(), v, sweep
        elif sweep == tolerances.jacobi_max_sweeps:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q

    raise EigenSolverError(
        "Jacobi iteration did not converge", tolerances.jacobi_max_sweeps
    )


def eigenvalues(g: Graph, tolerances: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Adjacency eigenvalues ``mu_1 >= ... >= mu_n``.

    Every eigenpair of the underlying solve is checked against
    ``|Av - mu v| <= tolerances.residual * max(1, mu_1)``.

    Raises
    ------
    EigenSolverError
        If the solver does not converge or an eigenpair fails the
        residual check.

    Examples
    --------

    >>> from eigsquares.families import complete
    >>> eigenvalues(complete(4)).round(12).tolist()
    [3.0, -1.0, -1.0, -1.0]
    """

    if g.n == 0:
        return np.zeros(0)

    adjacency = g.adjacency_matrix()
    values, vectors, sweeps = jacobi_eigh(adjacency, tolerances)

    residuals = np.linalg.norm(adjacency @ vectors - vectors * values, axis=0)
    bound = tolerances.band('residual', values.max())
    if residuals.max() > bound:
        raise EigenSolverError(
            f"Eigenpair residual {residuals.max():.3e} exceeds {bound:.3e}", sweeps
        )

    return np.sort(values)[::-1]


def exact_rank(g: Graph) -> int:
    """Rank of the 0/1 adjacency matrix.

    Computed by fraction-free (Bareiss) elimination over the integers,
    so no floating threshold is involved.
    """

    if g.n == 0:
        return 0

    rows = [[ZZ(int(g.has_edge(i, j))) for j in range(g.n)] for i in range(g.n)]
    matrix = DomainMatrix(rows, (g.n, g.n), ZZ)
    _, _, pivots = matrix.rref_den(method='FF')

    return len(pivots)


class Inertia(NamedTuple):
    """Counts of positive (``pi``), negative (``nu``) and zero (``gamma``)
    eigenvalues."""

    pi: int
    nu: int
    gamma: int


def _split_spectrum(
    values: np.ndarray, gamma: int, tolerances: Tolerances
) -> tuple[np.ndarray, np.ndarray]:
    """Drops the ``gamma`` smallest-magnitude eigenvalues and splits the
    rest by sign.

    Returns the positive values in descending order and the negative
    values in ascending order of magnitude.
    """

    order = np.argsort(np.abs(values), kind='stable')
    zero_block, nonzero = values[order[:gamma]], values[order[gamma:]]

    band = tolerances.band('zero', values.max() if len(values) else 0.0)
    if len(zero_block) and np.abs(zero_block).max() > band:
        raise InertiaMismatchError(
            f"Exact rank declares {gamma} zero eigenvalues but "
            f"{np.abs(zero_block).max():.3e} exceeds the zero band {band:.3e}"
        )
    elif len(nonzero) and np.abs(nonzero).min() <= band:
        _show_eigsquares_warning(
            f"Nonzero eigenvalue {np.abs(nonzero).min():.3e} lies inside the zero band"
        )

    positive = np.sort(nonzero[nonzero > 0])[::-1]
    negative = np.sort(nonzero[nonzero < 0])[::-1]

    return positive, negative


def inertia(g: Graph, tolerances: Tolerances = DEFAULT_TOLERANCES) -> Inertia:
    """Inertia ``(pi, nu, gamma)`` of the adjacency matrix.

    ``gamma`` is fixed exactly as ``n - rank(A)``; the remaining
    eigenvalues are split by sign.

    Raises
    ------
    InertiaMismatchError
        If an eigenvalue declared zero by the exact rank is not small.
    """

    gamma = g.n - exact_rank(g)
    positive, negative = _split_spectrum(eigenvalues(g, tolerances), gamma, tolerances)

    return Inertia(len(positive), len(negative), gamma)


@dataclass(frozen=True)
class SpectralSummary:
    """Spectral quantities of one graph.

    Attributes
    ----------
    n, m : int
        Order and size of the graph.
    eigenvalues : tuple[float]
        Adjacency eigenvalues in descending order.
    inertia : Inertia
        Counts of positive, negative and zero eigenvalues.
    s_plus, s_minus : float
        Sums of squares of the positive and negative eigenvalues.
    energy : float
        Sum of the absolute values of the eigenvalues.
    tau : float
        ``|mu_n|``.
    po, ne : float
        Sum of the positive eigenvalues and absolute sum of the negative
        ones; both equal half of the energy.
    b_value : float
        Sum of the pairwise products within the positive eigenvalues
        plus the same sum within the negative eigenvalues.
    """

    n: int
    m: int
    eigenvalues: tuple[float, ...]
    inertia: Inertia
    s_plus: float
    s_minus: float
    energy: float
    tau: float
    po: float
    ne: float
    b_value: float

    @property
    def spectral_radius(self) -> float:
        return self.eigenvalues[0] if self.n else 0.0

    def nonzero_parts(self) -> tuple[np.ndarray, np.ndarray]:
        """Positive (descending) and negative (ascending magnitude) values."""

        values = np.array(self.eigenvalues)
        order = np.argsort(np.abs(values), kind='stable')
        nonzero = values[order[self.inertia.gamma :]]
        return np.sort(nonzero[nonzero > 0])[::-1], np.sort(nonzero[nonzero < 0])[::-1]

    def trace_residuals(self) -> tuple[float, float]:
        """``|sum mu|`` and ``|sum mu^2 - 2m|``."""

        values = np.array(self.eigenvalues)
        return abs(values.sum()), abs((values**2).sum() - 2 * self.m)

    def li_wang_residuals(self) -> tuple[float, float]:
        """``|2 PO^2 - (2m + 2B)|`` and ``|PO - NE|``."""

        identity = abs(2 * self.po**2 - (2 * self.m + 2 * self.b_value))
        return identity, abs(self.po - self.ne)

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'm': self.m,
            'eigenvalues': list(self.eigenvalues),
            'inertia': list(self.inertia),
            's_plus': self.s_plus,
            's_minus': self.s_minus,
            'energy': self.energy,
            'tau': self.tau,
            'b_value': self.b_value,
        }

    def __str__(self) -> str:
        return sstr(self)

    __repr__ = __str__

    def _sympystr(self, printer) -> str:
        pi, nu, gamma = self.inertia
        return (
            f'{type(self).__name__}(n={self.n}, m={self.m}, '
            f'inertia=({pi}, {nu}, {gamma}), '
            f's_plus={self.s_plus:.6f}, s_minus={self.s_minus:.6f}, '
            f'energy={self.energy:.6f}, b_value={self.b_value:.6f})'
        )


def _pairwise_sum(values: np.ndarray) -> float:
    """Sum of ``x_i x_j`` over ``i < j``."""

    return float((values.sum() ** 2 - (values**2).sum()) / 2)


def b_value(summary: SpectralSummary) -> float:
    """Pairwise-product sum ``B`` of the nonzero eigenvalues.

    ``B`` sums ``l_i l_j`` over pairs of positive eigenvalues and over
    pairs of negative eigenvalues. For a trace-zero symmetric matrix it
    satisfies ``2 NE^2 = 2 PO^2 = tr(A^2) + 2B``.
    """

    positive, negative = summary.nonzero_parts()
    return _pairwise_sum(positive) + _pairwise_sum(negative)


def _check_identities(summary: SpectralSummary, tolerances: Tolerances):
    total, squares = summary.trace_residuals()
    band = tolerances.band('trace', 2 * summary.m)
    if max(total, squares) > band:
        raise InertiaMismatchError(
            f"Trace identities fail by {max(total, squares):.3e} (band {band:.3e})"
        )

    identity, balance = summary.li_wang_residuals()
    band = tolerances.band('identity', 2 * summary.m)
    if max(identity, balance) > band:
        raise InertiaMismatchError(
            f"Li-Wang identities fail by {max(identity, balance):.3e} (band {band:.3e})"
        )


def summarize(g: Graph, tolerances: Tolerances = DEFAULT_TOLERANCES) -> SpectralSummary:
    """Builds the SpectralSummary of a graph.

    Raises
    ------
    InertiaMismatchError
        If the spectrum breaks ``sum mu = 0``, ``sum mu^2 = 2m``,
        ``PO = NE`` or ``2 PO^2 = 2m + 2B`` beyond the tolerances, or an
        eigenvalue declared zero by the exact rank is not small.

    Examples
    --------

    >>> from eigsquares.families import cycle
    >>> round(summarize(cycle(5)).s_minus, 6)
    5.236068
    """

    values = eigenvalues(g, tolerances)
    gamma = g.n - exact_rank(g)
    positive, negative = _split_spectrum(values, gamma, tolerances)

    summary = SpectralSummary(
        n=g.n,
        m=g.m,
        eigenvalues=tuple(float(x) for x in values),
        inertia=Inertia(len(positive), len(negative), gamma),
        s_plus=float((positive**2).sum()),
        s_minus=float((negative**2).sum()),
        energy=float(positive.sum() - negative.sum()),
        tau=float(abs(values[-1])) if g.n else 0.0,
        po=float(positive.sum()),
        ne=float(-negative.sum()),
        b_value=_pairwise_sum(positive) + _pairwise_sum(negative),
    )
    _check_identities(summary, tolerances)

    return summary

#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Internal
========

This module contains variables, classes and functions for internal use.

Variables
---------
DEFAULT_TOLERANCES : Tolerances
    Tolerances used whenever a caller does not provide its own.

Functions
---------
_show_object(obj, use_unicode=True)
    Prints object in shell.
_format_table(header, rows)
    Aligns a table of strings in right-justified columns.
_show_eigsquares_warning(message)
    Displays an EigsquaresWarning message with custom format.

Classes
-------
Tolerances
    Centralized numerical tolerances.
EigsquaresWarning
    (Custom) eigsquares warning.
Graph6FormatError, EigenSolverError, InertiaMismatchError,
ColoringBudgetError, SearchCapError, CatalogIntegrityError
    Errors raised by the package.
"""

from dataclasses import dataclass, replace
from typing import Optional, Sequence
import warnings

from sympy import pretty


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared by every module.

    Attributes
    ----------
    jacobi_offdiag : float
        Jacobi stops when the off-diagonal norm falls below this fraction
        of the Frobenius norm.
    jacobi_max_sweeps : int
        Hard cap on the number of cyclic Jacobi sweeps.
    residual : float
        Bound on ``|Av - mu v|``, relative to ``max(1, mu_1)``.
    trace : float
        Bound on the trace identities, relative to ``max(1, 2m)``.
    identity : float
        Bound on the Li-Wang identity, relative to ``max(1, 2m)``.
    zero : float
        Largest magnitude accepted for an eigenvalue that the exact rank
        declares to be zero, relative to ``max(1, mu_1)``.
    compare : float
        Relative tolerance of every bound comparison.
    equality : float
        Relative band in which a bound is reported as attained.
    slack : float
        Absolute tolerance on the conjecture slack.
    """

    jacobi_offdiag: float = 1e-12
    jacobi_max_sweeps: int = 100
    residual: float = 1e-8
    trace: float = 1e-8
    identity: float = 1e-6
    zero: float = 1e-6
    compare: float = 1e-7
    equality: float = 1e-6
    slack: float = 1e-6

    def scaled(self, factor: float) -> 'Tolerances':
        """Rescales the classification tolerances.

        Only ``compare``, ``equality`` and ``slack`` change, so computed
        values are never affected.

        Parameters
        ----------
        factor : float
            Positive scale factor.

        Raises
        ------
        ValueError
            If the factor is not positive.
        """

        if not factor > 0:
            raise ValueError(f"Tolerance factor must be positive, got {factor!r}")

        return replace(
            self,
            compare=self.compare * factor,
            equality=self.equality * factor,
            slack=self.slack * factor,
        )

    def band(self, kind: str, *scales: float) -> float:
        """Absolute tolerance of ``kind`` scaled by ``max(1, |scales|)``."""

        return getattr(self, kind) * max([1.0] + [abs(s) for s in scales])


DEFAULT_TOLERANCES = Tolerances()


def _show_object(obj, use_unicode: bool = True):
    """Prints object in shell.

    Parameters
    ----------
    obj : Any
        The object to print.
    use_unicode : bool, default=True
        If ``True``, the object is displayed using unicode characters.
    """

    print('\n' + pretty(obj, use_unicode=use_unicode) + '\n')


def _format_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Aligns a table of strings in right-justified columns.

    Parameters
    ----------
    header : Sequence[str]
        Column titles.
    rows : Sequence[Sequence[str]]
        Table body, one sequence of cells per row.

    Returns
    -------
    table : str
        The aligned table, one line per row, header first.
    """

    raw_table = [list(header)] + [list(row) for row in rows]
    ncols = len(header)

    maxwidth = []
    for j in range(ncols):
        maxwidth.append(max(len(row[j]) for row in raw_table))

    lines = []
    for row in raw_table:
        cells = [' ' * (maxwidth[j] - len(row[j])) + row[j] for j in range(ncols)]
        lines.append('  '.join(cells))

    return '\n'.join(lines)


class EigsquaresWarning(Warning):
    """(Custom) eigsquares warning.

    Issued anytime eigsquares finds a condition that deserves attention
    but can be handled without halting the execution.
    """

    pass


def _eigsquares_formatwarning(message, category, filename, lineno, line=None):
    return f'\033[93m{category.__name__}\033[0m: {message}\n'


def _show_eigsquares_warning(message: str):
    """Displays an EigsquaresWarning message with custom formatting.

    Parameters
    ----------
    message : str
        The message to be displayed in the warning.
    """

    original_formatwarning = warnings.formatwarning
    warnings.formatwarning = _eigsquares_formatwarning
    warnings.warn(message, EigsquaresWarning)
    warnings.formatwarning = original_formatwarning


class Graph6FormatError(ValueError):
    """Malformed graph6 text.

    Attributes
    ----------
    offset : int
        Byte offset (0-based) of the offending character.
    line : int, optional
        Line number (1-based) when the text came from a stream.
    """

    def __init__(self, message: str, offset: int, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        where = f"line {line}, byte {offset}" if line is not None else f"byte {offset}"
        super().__init__(f"{message} (at {where})")


class EigenSolverError(ArithmeticError):
    """The eigensolver failed to deliver an accurate spectrum."""

    def __init__(self, message: str, sweeps: int):
        self.sweeps = sweeps
        super().__init__(f"{message} after {sweeps} sweeps")


class InertiaMismatchError(ArithmeticError):
    """The floating spectrum disagrees with the exact rank or with the
    trace identities."""

    pass


class ColoringBudgetError(RuntimeError):
    """The exact coloring search ran out of its node budget."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"Coloring search exhausted its budget of {nodes} nodes")


class SearchCapError(RuntimeError):
    """The requested enumeration exceeds the supported caps."""

    pass


class CatalogIntegrityError(RuntimeError):
    """A catalog graph failed its construction self-check."""

    pass

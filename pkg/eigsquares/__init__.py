#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Eigsquares
==========

Eigsquares studies the sums of squares of the positive and negative
adjacency eigenvalues of a graph, ``s+`` and ``s-``.

The central question is whether ``min(s-, s+) >= n - kappa`` holds for
every graph on ``n`` vertices with ``kappa`` components. Eigsquares
evaluates this inequality together with known spectral bounds on single
graphs, on named families and on every graph of a small order, and it
checks the twin-quotient argument behind graphs with two negative
eigenvalues.

Notes
-----
Eigenvalues come from a cyclic Jacobi solver; the number of zero
eigenvalues is taken from the exact rank of the adjacency matrix, so the
inertia never depends on a floating-point threshold.

Modules
-------
graph
    This module contains the class to create a simple graph.
graph6
    This module contains the graph6 codec.
spectral
    This module contains the eigensolver and the spectral summary.
bounds
    This module contains the spectral bounds and the bounds report.
families
    This module contains constructors of named graph families.
canonical
    This module contains the twin quotient and the catalog checks.
chromatic
    This module contains the exact chromatic number.
labeling
    This module contains canonical labeling and canonical forms.
search
    This module contains the enumeration and the counterexample search.
cli
    This module contains the command line interface.
"""

from eigsquares._internal import DEFAULT_TOLERANCES, Tolerances
from eigsquares.graph import Graph, blow_up
from eigsquares.graph6 import decode, encode
from eigsquares.spectral import SpectralSummary, summarize
from eigsquares.bounds import BoundsReport, full_report
from eigsquares.canonical import canonical_graph, p2_catalog
from eigsquares.chromatic import chromatic_number
from eigsquares.labeling import canonical_form
from eigsquares.search import SearchConfig, enumerate_graphs, hunt

__all__ = [
    'Tolerances',
    'DEFAULT_TOLERANCES',
    'Graph',
    'blow_up',
    'encode',
    'decode',
    'SpectralSummary',
    'summarize',
    'BoundsReport',
    'full_report',
    'canonical_graph',
    'p2_catalog',
    'chromatic_number',
    'canonical_form',
    'SearchConfig',
    'enumerate_graphs',
    'hunt',
]

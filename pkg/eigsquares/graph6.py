#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Graph6
======

This module contains the graph6 encoder and decoder.

graph6 packs the upper triangle of the adjacency matrix, column by
column, into big-endian groups of 6 bits, each written as the printable
character of code ``63 + group``. The data is preceded by the vertex
count ``N(n)``: one character for ``n <= 62``, ``'~'`` plus three
characters for ``n <= 258047`` and ``'~~'`` plus six characters beyond.

Functions
---------
encode(g)
    Encodes a graph as graph6 text.
decode(text)
    Decodes graph6 text.
read_graph6(stream)
    Iterates over the graphs of a graph6 stream.
"""

from typing import IO, Iterator, Optional, Union

from eigsquares._internal import Graph6FormatError
from eigsquares.graph import Graph, MAX_VERTICES

HEADER = '>>graph6<<'
_BIAS = 63
_FIRST, _LAST = 63, 126


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + _BIAS)
    elif n <= 258047:
        return '~' + ''.join(chr(_BIAS + (n >> shift & 63)) for shift in (12, 6, 0))
    shifts = (30, 24, 18, 12, 6, 0)
    return '~~' + ''.join(chr(_BIAS + (n >> shift & 63)) for shift in shifts)


def encode(g: Graph) -> str:
    """Encodes a graph as graph6 text (without header or newline).

    Examples
    --------

    >>> from eigsquares.families import complete
    >>> encode(complete(3))
    'Bw'
    """

    chars = [_encode_order(g.n)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = group << 1 | (g.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(_BIAS + group))
                group = filled = 0
    if filled:
        chars.append(chr(_BIAS + (group << (6 - filled))))

    return ''.join(chars)


def decode(text: Union[str, bytes], line: Optional[int] = None) -> Graph:
    """Decodes graph6 text.

    An optional ``>>graph6<<`` header and a trailing line break are
    accepted.

    Parameters
    ----------
    text : str or bytes
        The graph6 encoding.
    line : int, optional
        Line number reported in errors.

    Returns
    -------
    g : Graph
        The decoded graph.

    Raises
    ------
    Graph6FormatError
        If a character is outside the printable range 63-126, the length
        header is truncated, the data is too short or too long, or the
        padding bits are not zero. The error names the byte offset.
    """

    if isinstance(text, bytes):
        text = text.decode('ascii', errors='replace')
    text = text.rstrip('\r\n')

    start = len(HEADER) if text.startswith(HEADER) else 0
    for offset in range(start, len(text)):
        if not _FIRST <= ord(text[offset]) <= _LAST:
            raise Graph6FormatError(
                f"Character {text[offset]!r} is outside the graph6 range", offset, line
            )

    n, data_start = _decode_order(text, start, line)
    if n > MAX_VERTICES:
        raise Graph6FormatError(
            f"{n} vertices exceed the supported maximum of {MAX_VERTICES}", start, line
        )

    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    data = text[data_start:]
    if len(data) < nchars:
        raise Graph6FormatError(
            f"Expected {nchars} data bytes for {n} vertices, got {len(data)}",
            len(text),
            line,
        )
    elif len(data) > nchars:
        raise Graph6FormatError(
            "Trailing bytes after the graph data", data_start + nchars, line
        )

    value = 0
    for char in data:
        value = value << 6 | (ord(char) - _BIAS)
    padding = 6 * nchars - nbits
    if value & ((1 << padding) - 1):
        raise Graph6FormatError("Padding bits are not zero", len(text) - 1, line)
    value >>= padding

    rows = [0] * n
    position = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> position & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position -= 1

    return Graph.from_rows(rows)


def _decode_order(text: str, start: int, line: Optional[int]) -> tuple[int, int]:
    """Returns the vertex count and the offset where the data starts."""

    if len(text) <= start:
        raise Graph6FormatError("Missing length header", start, line)
    elif text[start] != '~':
        return ord(text[start]) - _BIAS, start + 1

    if text[start + 1 : start + 2] == '~':
        width, first = 6, start + 2
    else:
        width, first = 3, start + 1
    if len(text) < first + width:
        raise Graph6FormatError("Truncated length header", len(text), line)

    n = 0
    for char in text[first : first + width]:
        n = n << 6 | (ord(char) - _BIAS)
    return n, first + width


def read_graph6(stream: IO[str]) -> Iterator[Graph]:
    """Iterates over the graphs of a graph6 stream, one graph per line.

    Blank lines are skipped; errors report the 1-based line number.
    """

    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if text:
            yield decode(text, line=lineno)

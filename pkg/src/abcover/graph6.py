"""graph6 codec: printable-ASCII encoding of simple graphs.

The format packs the upper triangle of the adjacency matrix column by
column (column j, rows 0..j-1) into 6-bit groups, each stored as one
printable character chr(63 + value).  Orders below 63 use a single
leading size character; larger orders (up to 258047) use chr(126)
followed by three size characters.
"""

from __future__ import annotations

import io
from typing import IO, Iterable, Iterator

from .errors import Graph6ParseError
from .graph import Graph


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = chr(63 + n)
    elif n <= 258047:
        head = chr(126) + "".join(
            chr(63 + (n >> shift & 0x3F)) for shift in (12, 6, 0)
        )
    else:
        raise Graph6ParseError(f"order {n} exceeds the graph6 size range")
    bits = []
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6ParseError("empty graph6 string", offset=0)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"character {ch!r} outside graph6 range", offset=off)
    if ord(s[0]) == 126:
        if len(s) < 4 or ord(s[1]) == 126:
            raise Graph6ParseError("truncated or oversized graph6 size field", offset=1)
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body, body_off = s[4:], 4
    else:
        n = ord(s[0]) - 63
        body, body_off = s[1:], 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6ParseError(
            f"expected {need} data characters for n={n}, got {len(body)}",
            offset=body_off + min(len(body), need),
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> shift & 1 for shift in (5, 4, 3, 2, 1, 0))
    for k in range(nbits, len(bits)):
        if bits[k]:
            raise Graph6ParseError("nonzero padding bits", offset=body_off + k // 6)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def iter_graph6(source: IO[str] | Iterable[str]) -> Iterator[Graph]:
    """Stream graphs from newline-delimited graph6 text.

    Blank lines are skipped.  Parse failures re-raise with the 1-based
    line number attached.
    """
    for lineno, line in enumerate(source, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6ParseError as exc:
            raise Graph6ParseError(exc.base_message, offset=exc.offset,
                                   line=lineno) from exc


def read_graph6_file(path: str) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        yield from iter_graph6(fh)


def parse_graph6_lines(text: str) -> list[Graph]:
    return list(iter_graph6(io.StringIO(text)))

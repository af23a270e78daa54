"""Canonical labeling and isomorphism testing for small graphs.

Degree refinement (1-dimensional color refinement) interleaved with
individualization: branch on every vertex of the first non-singleton
cell, and take the lexicographically smallest upper-triangle adjacency
bit string over the discrete partitions reached.  Intended for orders up
to a dozen or so; no automorphism pruning beyond refinement.
"""

from __future__ import annotations

from .errors import ResourceLimitError
from .graph import Graph
from .graph6 import parse_graph6

DEFAULT_CANON_LIMIT = 12


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; subcells keep count order."""
    queue = [_cell_mask(c) for c in cells]
    while queue:
        splitter = queue.pop()
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((rows[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                for key in sorted(groups):
                    sub = groups[key]
                    new_cells.append(sub)
                    queue.append(_cell_mask(sub))
        cells = new_cells
    return cells


def _cell_mask(cell: list[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _canonical_bits(n: int, rows: tuple[int, ...]) -> int:
    """Smallest column-major upper-triangle bit string over all labelings
    compatible with refinement; first bit (0,1) is most significant."""
    best: list[int | None] = [None]

    def leaf_value(order: list[int]) -> int:
        val = 0
        for j in range(1, n):
            rj = rows[order[j]]
            for i in range(j):
                val = val << 1 | (rj >> order[i] & 1)
        return val

    def dfs(cells: list[list[int]]) -> None:
        cells = _refine(rows, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                rest = cells[idx + 1:]
                head = cells[:idx]
                for v in cell:
                    dfs(head + [[v], [u for u in cell if u != v]] + rest)
                return
        val = leaf_value([c[0] for c in cells])
        if best[0] is None or val < best[0]:
            best[0] = val

    dfs([list(range(n))])
    assert best[0] is not None
    return best[0]


def canonical_bytes(n: int, rows: tuple[int, ...],
                    limit: int = DEFAULT_CANON_LIMIT) -> bytes:
    """graph6 encoding of the canonically relabeled graph, as bytes."""
    if n > limit:
        raise ResourceLimitError(f"canonical labeling capped at n={limit}, got {n}")
    if n >= 63:
        raise ResourceLimitError("canonical labeling limited to single-byte graph6 orders")
    # Complete and empty graphs branch over every labeling; shortcut them.
    full = (1 << n) - 1
    if all(r == 0 for r in rows):
        bits = 0
    elif all(r == full ^ (1 << v) for v, r in enumerate(rows)):
        bits = (1 << (n * (n - 1) // 2)) - 1
    else:
        bits = _canonical_bits(n, rows)
    nbits = n * (n - 1) // 2
    chars = [chr(63 + n)]
    pad = (-nbits) % 6
    bits <<= pad
    for k in range(nbits + pad - 6, -1, -6):
        chars.append(chr(63 + (bits >> k & 0x3F)))
    return "".join(chars).encode("ascii")


def canonical_form(g: Graph, limit: int = DEFAULT_CANON_LIMIT) -> bytes:
    return canonical_bytes(g.n, g.rows, limit)


def canonical_graph(g: Graph, limit: int = DEFAULT_CANON_LIMIT) -> Graph:
    return parse_graph6(canonical_form(g, limit).decode("ascii"))


def are_isomorphic(g1: Graph, g2: Graph,
                   limit: int = DEFAULT_CANON_LIMIT) -> bool:
    if g1.n != g2.n:
        return False
    return canonical_form(g1, limit) == canonical_form(g2, limit)

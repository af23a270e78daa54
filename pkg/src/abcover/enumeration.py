"""Isomorphism-free graph generation.

Two corpus builders: every graph of a small order (exhaustive), and
every dense graph whose complement has at most k edges (generated by
enumerating sparse complements and complementing).
"""

from __future__ import annotations

import functools
from typing import Iterator

from .canon import canonical_bytes, canonical_form
from .errors import ResourceLimitError
from .graph import Graph, complement
from .graph6 import parse_graph6

ENUMERATE_ALL_MAX = 8
# Exhaustive edge-mask scan up to this order; augmentation above it.
_BRUTE_MAX = 6
DENSE_CLASS_CAP = 500_000


@functools.lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n <= 1:
        return (Graph(n, (0,) * n),)
    if n <= _BRUTE_MAX:
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        seen = {}
        for mask in range(1 << len(pairs)):
            rows = [0] * n
            m = mask
            while m:
                low = m & -m
                i, j = pairs[low.bit_length() - 1]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                m ^= low
            key = canonical_bytes(n, tuple(rows))
            if key not in seen:
                seen[key] = None
        return tuple(parse_graph6(k.decode("ascii")) for k in sorted(seen))
    # Augment each (n-1)-representative by one vertex with every neighborhood.
    seen = {}
    for base in _all_graphs(n - 1):
        for ext in range(1 << (n - 1)):
            rows = list(base.rows)
            for v in range(n - 1):
                if ext >> v & 1:
                    rows[v] |= 1 << (n - 1)
            rows.append(ext)
            key = canonical_bytes(n, tuple(rows))
            if key not in seen:
                seen[key] = None
    return tuple(parse_graph6(k.decode("ascii")) for k in sorted(seen))


def enumerate_all(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of order n, in sorted
    canonical-form order."""
    if n > ENUMERATE_ALL_MAX:
        raise ResourceLimitError(
            f"exhaustive enumeration capped at n={ENUMERATE_ALL_MAX}, got {n}")
    yield from _all_graphs(n)


@functools.lru_cache(maxsize=None)
def _sparse_classes(max_edges: int, max_support: int) -> tuple[tuple[bytes, Graph], ...]:
    """Isomorphism classes of graphs with <= max_edges edges and no isolated
    vertices, on at most max_support vertices.  Grown one edge at a time."""
    zero = Graph(0, ())
    levels: list[dict[bytes, Graph]] = [{canonical_form(zero): zero}]
    total = 1
    for m in range(1, max_edges + 1):
        level: dict[bytes, Graph] = {}
        for g in levels[m - 1].values():
            s = g.n
            grown = []
            # edge between two existing non-adjacent vertices
            for j in range(1, s):
                for i in range(j):
                    if not g.has_edge(i, j):
                        rows = list(g.rows)
                        rows[i] |= 1 << j
                        rows[j] |= 1 << i
                        grown.append((s, tuple(rows)))
            # edge from an existing vertex to one new vertex
            if s + 1 <= max_support:
                for i in range(s):
                    rows = [r for r in g.rows]
                    rows[i] |= 1 << s
                    rows.append(1 << i)
                    grown.append((s + 1, tuple(rows)))
            # edge on two new vertices
            if s + 2 <= max_support:
                rows = list(g.rows) + [1 << (s + 1), 1 << s]
                grown.append((s + 2, tuple(rows)))
            for nn, rows in grown:
                key = canonical_bytes(nn, rows, limit=max(nn, 12))
                if key not in level:
                    level[key] = parse_graph6(key.decode("ascii"))
                    total += 1
                    if total > DENSE_CLASS_CAP:
                        raise ResourceLimitError(
                            "sparse-complement class count exceeds cap")
        levels.append(level)
    out = []
    for level in levels:
        out.extend(sorted(level.items()))
    return tuple(out)


def enumerate_dense_candidates(n: int, k: int) -> Iterator[Graph]:
    """One representative per isomorphism class of n-vertex graphs whose
    complement has at most k edges.

    Complements are enumerated on their non-isolated support, padded with
    isolated vertices to order n, and complemented.  Order: by complement
    edge count, then complement canonical form.
    """
    if k > n * (n - 1) // 2:
        raise ResourceLimitError("complement budget exceeds the edge count range")
    for _key, sparse in _sparse_classes(k, min(2 * k, n)):
        if sparse.n > n:
            continue
        pad = Graph(n, sparse.rows + (0,) * (n - sparse.n))
        yield complement(pad)

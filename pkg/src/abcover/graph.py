"""Simple undirected graphs as immutable bit-row adjacency.

Vertices are dense 0-based integers.  Row ``rows[v]`` is an int whose bit
``u`` is set iff ``uv`` is an edge; Python ints give O(1) neighborhood
intersection at any order we care about (a few hundred vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidParameterError

VertexSet = frozenset  # subsets of range(n), used for S, T, components


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Loopless simple graph on vertices 0..n-1, immutable and hashable."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise InvalidParameterError("row count must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise InvalidParameterError(f"row {v} references vertices >= n")
            if row >> v & 1:
                raise InvalidParameterError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if (self.rows[v] >> u & 1) != (self.rows[u] >> v & 1):
                    raise InvalidParameterError(f"asymmetric adjacency at {u},{v}")

    # -- basic queries -------------------------------------------------

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return _mask_to_set(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographic."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            while row:
                low = row & -row
                out.append((u, low.bit_length() - 1))
                row ^= low
        return out

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))


# -- constructors ------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise InvalidParameterError(f"bad edge ({u},{v}) for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty(k: int) -> Graph:
    return Graph(k, (0,) * k)


def complete(k: int) -> Graph:
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << v) for v in range(k)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise InvalidParameterError("cycle needs at least 3 vertices")
    return from_edges(k, [(v, (v + 1) % k) for v in range(k)])


def path(k: int) -> Graph:
    return from_edges(k, [(v, v + 1) for v in range(k - 1)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    rows = list(g1.rows) + [r << shift for r in g2.rows]
    return Graph(g1.n + g2.n, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n = g1.n + g2.n
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << n) - 1) ^ mask1
    rows = [r | mask2 for r in g1.rows]
    rows += [(r << g1.n) | mask1 for r in g2.rows]
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)))


def h_graph(n: int, gamma: int) -> Graph:
    """Clique on n-1 vertices plus one extra vertex adjacent to gamma-1 of them.

    Equivalently K_{gamma-1} joined with (K_{n-gamma} disjoint K_1).
    Labeling: the gamma-1 attachment vertices come first, then the
    (n-gamma)-clique block, and the low-degree vertex is n-1.
    """
    if gamma < 1 or gamma > n:
        raise InvalidParameterError(f"need 1 <= gamma <= n, got gamma={gamma}, n={n}")
    attach = complete(gamma - 1)
    rest = disjoint_union(complete(n - gamma), complete(1))
    return join(attach, rest)


# -- structural queries ------------------------------------------------


def component_masks(rows: tuple[int, ...], universe: int) -> list[int]:
    """Connected components of the subgraph induced on ``universe``.

    Returned masks are ordered by their smallest member.
    """
    out = []
    todo = universe
    while todo:
        low = todo & -todo
        comp = low
        frontier = low
        while frontier:
            v = frontier & -frontier
            frontier ^= v
            nbrs = rows[v.bit_length() - 1] & universe & ~comp
            comp |= nbrs
            frontier |= nbrs
        out.append(comp)
        todo &= ~comp
    return out


def components(g: Graph) -> list[frozenset[int]]:
    full = (1 << g.n) - 1
    return [_mask_to_set(m) for m in component_masks(g.rows, full)]


def bridge_list(rows: tuple[int, ...], universe: int) -> list[tuple[int, int]]:
    """Cut edges of the subgraph induced on ``universe``, lexicographic."""
    # Iterative DFS with low-link values; small graphs, clarity over speed.
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out = []
    timer = 0
    verts = _mask_to_set(universe)
    for root in sorted(verts):
        if root in disc:
            continue
        stack = [(root, -1, iter(sorted(_mask_to_set(rows[root] & universe))))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(sorted(_mask_to_set(rows[w] & universe)))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.append((min(parent, v), max(parent, v)))
    out.sort()
    return out


def bridges(g: Graph) -> list[tuple[int, int]]:
    return bridge_list(g.rows, (1 << g.n) - 1)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = _mask(s)
    return all(not (g.rows[v] & m) for v in _mask_to_set(m))


def cross_edges(g: Graph, v1: Iterable[int], v2: Iterable[int]) -> int:
    m1, m2 = _mask(v1), _mask(v2)
    if m1 & m2:
        raise InvalidParameterError("cross_edges requires disjoint vertex sets")
    return sum((g.rows[v] & m2).bit_count() for v in _mask_to_set(m1))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(r.bit_count() for r in g.rows)


def induced_delete(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """G minus the vertices in ``s``.

    Returns the smaller graph together with the kept old labels in order,
    i.e. new vertex i was old vertex ``kept[i]``.
    """
    drop = _mask(s)
    kept = tuple(v for v in range(g.n) if not (drop >> v & 1))
    index = {old: new for new, old in enumerate(kept)}
    rows = [0] * len(kept)
    for new, old in enumerate(kept):
        row = g.rows[old] & ~drop
        while row:
            lowbit = row & -row
            rows[new] |= 1 << index[lowbit.bit_length() - 1]
            row ^= lowbit
    return Graph(len(kept), tuple(rows)), kept


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Apply a permutation: new vertex i is old vertex perm[i]."""
    p = tuple(perm)
    if sorted(p) != list(range(g.n)):
        raise InvalidParameterError("not a permutation of the vertex range")
    inv = [0] * g.n
    for new, old in enumerate(p):
        inv[old] = new
    rows = [0] * g.n
    for new, old in enumerate(p):
        row = g.rows[old]
        acc = 0
        while row:
            lowbit = row & -row
            acc |= 1 << inv[lowbit.bit_length() - 1]
            row ^= lowbit
        rows[new] = acc
    return Graph(g.n, tuple(rows))

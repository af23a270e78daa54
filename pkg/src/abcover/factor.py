"""Degree-constrained spanning subgraph (factor) existence.

Two independent routes: an exact deficiency criterion evaluated over all
3^n disjoint (S, T) assignments, and a branch-and-prune search for an
explicit factor.  The search also supports forced and forbidden edges,
which is what the per-edge covered test needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InvalidParameterError, ResourceLimitError
from .graph import Graph, _mask, _mask_to_set, component_masks

GF_SCAN_MAX = 16
FACTOR_EDGE_MAX = 64


@dataclass(frozen=True)
class DegreeSpec:
    """Per-vertex degree bounds g(v) <= d_F(v) <= f(v)."""

    g: tuple[int, ...]
    f: tuple[int, ...]

    def __post_init__(self):
        if len(self.g) != len(self.f):
            raise InvalidParameterError("g and f must have equal length")
        for v, (lo, hi) in enumerate(zip(self.g, self.f)):
            if not 0 <= lo <= hi:
                raise InvalidParameterError(f"need 0 <= g <= f at vertex {v}")

    @staticmethod
    def uniform(n: int, a: int, b: int) -> "DegreeSpec":
        if not 0 <= a <= b:
            raise InvalidParameterError("need 0 <= a <= b")
        return DegreeSpec((a,) * n, (b,) * n)

    def check_length(self, n: int) -> None:
        if len(self.g) != n:
            raise InvalidParameterError(
                f"spec length {len(self.g)} does not match n={n}")


@dataclass(frozen=True)
class DeficiencyCertificate:
    """A disjoint pair (S, T) whose deficiency value is negative."""

    S: frozenset[int]
    T: frozenset[int]
    value: int


@dataclass(frozen=True)
class FactorWitness:
    edges: frozenset[tuple[int, int]]


def _check_disjoint(smask: int, tmask: int) -> None:
    if smask & tmask:
        raise InvalidParameterError("S and T must be disjoint")


def _qhat_mask(rows: tuple[int, ...], fvec: tuple[int, ...], eqmask: int,
               rest: int, tmask: int) -> int:
    count = 0
    for comp in component_masks(rows, rest):
        if comp & ~eqmask:
            continue
        parity = 0
        m = comp
        while m:
            low = m & -m
            v = low.bit_length() - 1
            parity ^= (fvec[v] + (rows[v] & tmask).bit_count()) & 1
            m ^= low
        count += parity
    return count


def q_hat(g: Graph, spec: DegreeSpec, s: Iterable[int], t: Iterable[int]) -> int:
    """Components C of G-S-T with g == f throughout C and odd
    f(V(C)) + e(V(C), T)."""
    spec.check_length(g.n)
    smask, tmask = _mask(s), _mask(t)
    _check_disjoint(smask, tmask)
    full = (1 << g.n) - 1
    eqmask = _mask(v for v in range(g.n) if spec.g[v] == spec.f[v])
    return _qhat_mask(g.rows, spec.f, eqmask, full & ~smask & ~tmask, tmask)


def lovasz_deficiency(g: Graph, spec: DegreeSpec,
                      s: Iterable[int], t: Iterable[int]) -> int:
    """f(S) - g(T) + sum over x in T of d_{G-S}(x), minus the odd
    equal-bounds component count."""
    spec.check_length(g.n)
    smask, tmask = _mask(s), _mask(t)
    _check_disjoint(smask, tmask)
    value = sum(spec.f[v] for v in _mask_to_set(smask))
    value -= sum(spec.g[v] for v in _mask_to_set(tmask))
    value += sum((g.rows[x] & ~smask).bit_count() for x in _mask_to_set(tmask))
    return value - q_hat(g, spec, _mask_to_set(smask), _mask_to_set(tmask))


class _Found(Exception):
    pass


def has_gf_factor(g: Graph, spec: DegreeSpec,
                  limit: int = GF_SCAN_MAX
                  ) -> tuple[bool, Optional[DeficiencyCertificate]]:
    """Exact decision by scanning every disjoint (S, T) assignment.

    Assignments are visited in base-3 order (vertex 0 most significant;
    digit 0 = neither, 1 = S, 2 = T), so a returned certificate is the
    lexicographically first violating pair.
    """
    spec.check_length(g.n)
    n = g.n
    if n > limit:
        raise ResourceLimitError(f"deficiency scan capped at n={limit}, got {n}")
    rows = g.rows
    gvec, fvec = spec.g, spec.f
    full = (1 << n) - 1
    eqmask = _mask(v for v in range(n) if gvec[v] == fvec[v])
    hit: list[DeficiencyCertificate] = []

    def rec(v: int, smask: int, tmask: int, fs: int, gt: int) -> None:
        if v == n:
            tlist = _mask_to_set(tmask)
            base = fs - gt + sum((rows[x] & ~smask).bit_count() for x in tlist)
            rest = full & ~smask & ~tmask
            if base - rest.bit_count() >= 0:
                return
            value = base - _qhat_mask(rows, fvec, eqmask, rest, tmask)
            if value < 0:
                hit.append(DeficiencyCertificate(
                    _mask_to_set(smask), tlist, value))
                raise _Found
            return
        bit = 1 << v
        rec(v + 1, smask, tmask, fs, gt)
        rec(v + 1, smask | bit, tmask, fs + fvec[v], gt)
        rec(v + 1, smask, tmask | bit, fs, gt + gvec[v])

    try:
        rec(0, 0, 0, 0, 0)
    except _Found:
        return False, hit[0]
    return True, None


def _norm_edge(e: tuple[int, int]) -> tuple[int, int]:
    u, v = e
    return (u, v) if u < v else (v, u)


def find_factor(g: Graph, spec: DegreeSpec,
                forced: Iterable[tuple[int, int]] = (),
                forbidden: Iterable[tuple[int, int]] = (),
                edge_limit: int = FACTOR_EDGE_MAX) -> Optional[FactorWitness]:
    """Branch-and-prune search for an edge set with all degrees in
    [g(v), f(v)], containing every forced edge and no forbidden one.

    Pruning is by per-vertex degree feasibility: chosen degree never
    exceeds f, chosen plus still-undecided never drops below g.
    """
    spec.check_length(g.n)
    all_edges = g.edges()
    if len(all_edges) > edge_limit:
        raise ResourceLimitError(
            f"factor search capped at {edge_limit} edges, got {len(all_edges)}")
    edge_set = set(all_edges)
    forced = {_norm_edge(e) for e in forced}
    forbidden = {_norm_edge(e) for e in forbidden}
    if not forced <= edge_set or not forbidden <= edge_set:
        raise InvalidParameterError("forced/forbidden edges must lie in E(G)")
    if forced & forbidden:
        raise InvalidParameterError("forced and forbidden edges overlap")

    n = g.n
    gvec, fvec = spec.g, spec.f
    deg = [0] * n
    for u, v in forced:
        deg[u] += 1
        deg[v] += 1
    if any(deg[v] > fvec[v] for v in range(n)):
        return None

    slack = [fvec[v] - gvec[v] for v in range(n)]
    undecided = sorted(
        (e for e in all_edges if e not in forced and e not in forbidden),
        key=lambda e: (min(slack[e[0]], slack[e[1]]), e))
    avail = [0] * n
    for u, v in undecided:
        avail[u] += 1
        avail[v] += 1
    if any(deg[v] + avail[v] < gvec[v] for v in range(n)):
        return None

    chosen: list[tuple[int, int]] = []

    def feasible(v: int) -> bool:
        return deg[v] <= fvec[v] and deg[v] + avail[v] >= gvec[v]

    def rec(i: int) -> bool:
        if i == len(undecided):
            return all(gvec[v] <= deg[v] <= fvec[v] for v in range(n))
        u, v = undecided[i]
        avail[u] -= 1
        avail[v] -= 1
        if deg[u] < fvec[u] and deg[v] < fvec[v]:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            if feasible(u) and feasible(v) and rec(i + 1):
                return True
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if feasible(u) and feasible(v) and rec(i + 1):
            return True
        avail[u] += 1
        avail[v] += 1
        return False

    if rec(0):
        return FactorWitness(frozenset(chosen) | forced)
    return None


def has_ab_factor(g: Graph, a: int, b: int) -> bool:
    ok, _cert = has_gf_factor(g, DegreeSpec.uniform(g.n, a, b))
    return ok


def factor_through_edge_search(g: Graph, a: int, b: int,
                               e: tuple[int, int]) -> bool:
    """Definitional route: search for a factor forced to use e."""
    witness = find_factor(g, DegreeSpec.uniform(g.n, a, b), forced=[e])
    return witness is not None


def factor_through_edge_deficiency(g: Graph, a: int, b: int,
                                   e: tuple[int, int]) -> bool:
    """Reduction route: delete e, lower both endpoint bounds by one, and
    ask for a factor of the reduced instance."""
    u, v = _norm_edge(e)
    if not g.has_edge(u, v):
        raise InvalidParameterError(f"edge ({u},{v}) not in E(G)")
    if b == 0:
        return False
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    gvec = [a] * g.n
    fvec = [b] * g.n
    for x in (u, v):
        gvec[x] = max(a - 1, 0)
        fvec[x] = b - 1
    ok, _cert = has_gf_factor(Graph(g.n, tuple(rows)),
                              DegreeSpec(tuple(gvec), tuple(fvec)))
    return ok


def has_factor_containing_edge(g: Graph, a: int, b: int, e: tuple[int, int],
                               method: str = "search") -> bool:
    if method == "search":
        return factor_through_edge_search(g, a, b, e)
    if method == "deficiency":
        return factor_through_edge_deficiency(g, a, b, e)
    raise InvalidParameterError(f"unknown method {method!r}")

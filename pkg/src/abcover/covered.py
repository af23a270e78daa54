"""The [a,b]-covered decision: every edge extends to an [a,b]-factor.

Two independent engines.  The structural one evaluates a deficiency
threshold (theta against epsilon) over all 3^n disjoint (S, T) pairs,
classifying components of G-S-T as odd/even (a = b) or neutral (a < b).
The definitional one searches for an edge-forced factor per edge.

Edgeless graphs are vacuously covered on both routes: the covering
property quantifies over edges, and the (S, T) criterion is applied only
to graphs that have an edge to cover.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InvalidParameterError, ResourceLimitError
from .factor import factor_through_edge_search
from .graph import Graph, _mask, _mask_to_set, component_masks

COVERED_SCAN_MAX = 16


class ComponentClass(enum.Enum):
    ODD = "odd"
    EVEN = "even"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class StructuralWitness:
    """A disjoint (S, T) pair with theta below its epsilon threshold."""

    S: frozenset[int]
    T: frozenset[int]
    theta: int
    epsilon: int


@dataclass(frozen=True)
class CoverageVerdict:
    covered: bool
    structural_witness: Optional[StructuralWitness] = None
    edge_witness: Optional[tuple[int, int]] = None


def _check_ab(a: int, b: int) -> None:
    if not 1 <= a <= b:
        raise InvalidParameterError("need 1 <= a <= b")


def _comp_parity(rows: tuple[int, ...], comp: int, tmask: int, b: int) -> int:
    """Parity of e_G(T, V(C)) + b*|V(C)|."""
    parity = (b * comp.bit_count()) & 1
    m = comp
    while m:
        low = m & -m
        parity ^= (rows[low.bit_length() - 1] & tmask).bit_count() & 1
        m ^= low
    return parity


def classify_component(g: Graph, c: Iterable[int], t: Iterable[int],
                       a: int, b: int) -> ComponentClass:
    _check_ab(a, b)
    if a != b:
        return ComponentClass.NEUTRAL
    comp, tmask = _mask(c), _mask(t)
    if _comp_parity(g.rows, comp, tmask, b):
        return ComponentClass.ODD
    return ComponentClass.EVEN


def count_odd(g: Graph, s: Iterable[int], t: Iterable[int],
              a: int, b: int) -> int:
    _check_ab(a, b)
    smask, tmask = _mask(s), _mask(t)
    if smask & tmask:
        raise InvalidParameterError("S and T must be disjoint")
    if a != b:
        return 0
    rest = ((1 << g.n) - 1) & ~smask & ~tmask
    return sum(_comp_parity(g.rows, comp, tmask, b)
               for comp in component_masks(g.rows, rest))


def theta(g: Graph, s: Iterable[int], t: Iterable[int],
          a: int, b: int) -> int:
    """b|S| - a|T| + sum over x in T of d_{G-S}(x), minus the odd count."""
    _check_ab(a, b)
    smask, tmask = _mask(s), _mask(t)
    if smask & tmask:
        raise InvalidParameterError("S and T must be disjoint")
    value = b * smask.bit_count() - a * tmask.bit_count()
    value += sum((g.rows[x] & ~smask).bit_count() for x in _mask_to_set(tmask))
    return value - count_odd(g, _mask_to_set(smask), _mask_to_set(tmask), a, b)


def _split_at_bridge(rows: tuple[int, ...], comp: int,
                     u: int, v: int) -> tuple[int, int]:
    """The two sides of component ``comp`` after deleting bridge uv."""
    side = 1 << u
    frontier = side
    vbit = 1 << v
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        x = low.bit_length() - 1
        nbrs = rows[x] & comp & ~side
        if x == u:
            nbrs &= ~vbit
        side |= nbrs
        frontier |= nbrs
    return side, comp & ~side


def _bridges_in(rows: tuple[int, ...], comp: int) -> list[tuple[int, int]]:
    from .graph import bridge_list
    return bridge_list(rows, comp)


def _epsilon_mask(rows: tuple[int, ...], n: int, smask: int, tmask: int,
                  a: int, b: int,
                  comps: Optional[list[int]] = None) -> int:
    # clause (i)(1): S carries an edge
    for v in _mask_to_set(smask):
        if rows[v] & smask:
            return 2
    rest = ((1 << n) - 1) & ~smask & ~tmask
    s_nbrs = 0
    for v in _mask_to_set(smask):
        s_nbrs |= rows[v]
    if a == b:
        # clause (i)(2): an even component touching S, or split by a cut
        # edge into two even-parity sides
        if comps is None:
            comps = component_masks(rows, rest)
        for comp in comps:
            if _comp_parity(rows, comp, tmask, b):
                continue
            if comp & s_nbrs:
                return 2
            for u, v in _bridges_in(rows, comp):
                c1, c2 = _split_at_bridge(rows, comp, u, v)
                if (_comp_parity(rows, c1, tmask, b) == 0
                        and _comp_parity(rows, c2, tmask, b) == 0):
                    return 2
        return 0
    # clause (ii): a neutral component adjacent to S (a < b: every
    # component is neutral)
    if rest & s_nbrs:
        return 1
    return 0


def epsilon(g: Graph, s: Iterable[int], t: Iterable[int],
            a: int, b: int) -> int:
    _check_ab(a, b)
    smask, tmask = _mask(s), _mask(t)
    if smask & tmask:
        raise InvalidParameterError("S and T must be disjoint")
    return _epsilon_mask(g.rows, g.n, smask, tmask, a, b)


class _Found(Exception):
    pass


def is_ab_covered_structural(g: Graph, a: int, b: int,
                             limit: int = COVERED_SCAN_MAX) -> CoverageVerdict:
    """Covered iff theta >= epsilon for every disjoint (S, T) pair;
    otherwise carries the lexicographically first violating witness
    (base-3 assignment order, vertex 0 most significant)."""
    _check_ab(a, b)
    n = g.n
    if n > limit:
        raise ResourceLimitError(f"covered scan capped at n={limit}, got {n}")
    if all(r == 0 for r in g.rows):
        return CoverageVerdict(covered=True)
    rows = g.rows
    full = (1 << n) - 1
    uniform = a == b
    hit: list[StructuralWitness] = []

    def leaf(smask: int, tmask: int, scount: int, tcount: int) -> None:
        rest = full & ~smask & ~tmask
        base = b * scount - a * tcount
        m = tmask
        while m:
            low = m & -m
            base += (rows[low.bit_length() - 1] & ~smask).bit_count()
            m ^= low
        # o <= |rest| and epsilon <= 2, so this pair cannot violate
        if base - (rest.bit_count() if uniform else 0) >= 2:
            return
        comps = None
        if uniform:
            comps = component_masks(rows, rest)
            th = base - sum(_comp_parity(rows, c, tmask, b) for c in comps)
        else:
            th = base
        if th >= 2:
            return
        eps = _epsilon_mask(rows, n, smask, tmask, a, b, comps)
        if th < eps:
            hit.append(StructuralWitness(_mask_to_set(smask),
                                         _mask_to_set(tmask), th, eps))
            raise _Found

    def rec(v: int, smask: int, tmask: int, scount: int, tcount: int) -> None:
        if v == n:
            leaf(smask, tmask, scount, tcount)
            return
        bit = 1 << v
        rec(v + 1, smask, tmask, scount, tcount)
        rec(v + 1, smask | bit, tmask, scount + 1, tcount)
        rec(v + 1, smask, tmask | bit, scount, tcount + 1)

    try:
        rec(0, 0, 0, 0, 0)
    except _Found:
        return CoverageVerdict(covered=False, structural_witness=hit[0])
    return CoverageVerdict(covered=True)


def is_ab_covered_definitional(g: Graph, a: int, b: int) -> CoverageVerdict:
    """Covered iff every edge extends to an [a,b]-factor, checked by
    direct edge-forced search; the witness is the first failing edge in
    lexicographic order."""
    _check_ab(a, b)
    for e in g.edges():
        if not factor_through_edge_search(g, a, b, e):
            return CoverageVerdict(covered=False, edge_witness=e)
    return CoverageVerdict(covered=True)


def is_matching_covered(g: Graph) -> CoverageVerdict:
    return is_ab_covered_structural(g, 1, 1)

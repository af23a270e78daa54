"""Adjacency spectral radius, equitable quotients, and spectral bounds.

The main eigensolver is shifted power iteration per connected component
(the shift keeps the top eigenvalue dominant on bipartite components).
Equitable quotient matrices give an independent route: their largest
real eigenvalue, located by characteristic-polynomial bisection, equals
the spectral radius of the underlying graph.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParameterError, NumericFailureError
from .graph import Graph, _mask, _mask_to_set, component_masks, min_degree

DEFAULT_TOL = 1e-10
COMPARE_TOL = 1e-8
MAX_ITERATIONS = 1_000_000
# Interval half-width for certified comparisons: residual times safety factor.
ENCLOSURE_SAFETY = 10.0


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    residual: float
    iterations: int

    @property
    def enclosure(self) -> tuple[float, float]:
        m = ENCLOSURE_SAFETY * self.residual
        return (self.rho - m, self.rho + m)


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INDISTINGUISHABLE = "indistinguishable"


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def _power_iteration(a: np.ndarray, tol: float) -> tuple[float, float, int]:
    k = a.shape[0]
    if k == 1:
        return 0.0, 0.0, 0
    x = np.ones(k) / math.sqrt(k)
    for it in range(MAX_ITERATIONS + 1):
        ax = a @ x
        rho = float(x @ ax)
        residual = float(np.max(np.abs(ax - rho * x)))
        if residual <= tol:
            return rho, residual, it
        y = ax + x  # (A + I) x, keeping the top eigenvalue dominant
        x = y / np.linalg.norm(y)
    raise NumericFailureError(
        f"power iteration did not reach residual {tol} in {MAX_ITERATIONS} steps")


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Largest adjacency eigenvalue; the maximum over components for
    disconnected graphs.  Deterministic all-ones start vector."""
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    if g.n == 0:
        return SpectralResult(0.0, 0.0, 0)
    full = (1 << g.n) - 1
    a = adjacency_matrix(g)
    best = SpectralResult(0.0, 0.0, 0)
    total_iters = 0
    worst_residual = 0.0
    for comp in component_masks(g.rows, full):
        idx = sorted(_mask_to_set(comp))
        rho, residual, iters = _power_iteration(a[np.ix_(idx, idx)], tol)
        total_iters += iters
        worst_residual = max(worst_residual, residual)
        if rho > best.rho:
            best = SpectralResult(rho, residual, 0)
    return SpectralResult(best.rho, worst_residual, total_iters)


def compare_rho(g1: Graph, g2: Graph, tol: float = COMPARE_TOL) -> Ordering:
    """Certified comparison via interval enclosures; overlapping
    enclosures report Indistinguishable rather than guessing."""
    r1 = spectral_radius(g1, tol)
    r2 = spectral_radius(g2, tol)
    lo1, hi1 = r1.enclosure
    lo2, hi2 = r2.enclosure
    if lo1 > hi2:
        return Ordering.GREATER
    if lo2 > hi1:
        return Ordering.LESS
    return Ordering.INDISTINGUISHABLE


# -- equitable quotients ----------------------------------------------


@dataclass(frozen=True)
class QuotientMatrix:
    parts: tuple[frozenset[int], ...]
    b: tuple[tuple[int, ...], ...]


def quotient_matrix(g: Graph, parts: Sequence[Iterable[int]]) -> QuotientMatrix:
    """Quotient of an equitable partition; raises if any vertex sees a
    different neighbor count into some part than its cell-mates do."""
    masks = [_mask(p) for p in parts]
    if any(m == 0 for m in masks):
        raise InvalidParameterError("empty part in partition")
    union = 0
    for m in masks:
        if union & m:
            raise InvalidParameterError("parts overlap")
        union |= m
    if union != (1 << g.n) - 1:
        raise InvalidParameterError("parts do not cover the vertex set")
    b: list[tuple[int, ...]] = []
    for i, mi in enumerate(masks):
        verts = sorted(_mask_to_set(mi))
        row = tuple((g.rows[verts[0]] & mj).bit_count() for mj in masks)
        for v in verts[1:]:
            for j, mj in enumerate(masks):
                if (g.rows[v] & mj).bit_count() != row[j]:
                    raise InvalidParameterError(
                        f"partition not equitable: vertex {v} in part {i} has "
                        f"{(g.rows[v] & mj).bit_count()} neighbors in part {j}, "
                        f"expected {row[j]}")
        b.append(row)
    return QuotientMatrix(tuple(frozenset(_mask_to_set(m)) for m in masks),
                          tuple(b))


def _charpoly(b: np.ndarray, x: float) -> float:
    k = b.shape[0]
    return float(np.linalg.det(x * np.eye(k) - b))


def _support_blocks(b: np.ndarray) -> list[list[int]]:
    # Quotients of undirected graphs have symmetric support, so the
    # irreducible blocks are plain connected components of the support.
    k = b.shape[0]
    seen = [False] * k
    blocks = []
    for start in range(k):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(k):
                if not seen[j] and (b[i, j] != 0 or b[j, i] != 0):
                    seen[j] = True
                    comp.append(j)
                    stack.append(j)
        blocks.append(sorted(comp))
    return blocks


def _top_root(b: np.ndarray, tol: float) -> float:
    """Largest real eigenvalue of an irreducible nonnegative matrix by
    bisection on its characteristic polynomial."""
    k = b.shape[0]
    if k == 1:
        return float(b[0, 0])
    row_sums = b.sum(axis=1)
    lo_bound, hi = float(row_sums.min()), float(row_sums.max())
    if hi == lo_bound:
        return hi
    grid = 1024
    while grid <= 4_194_304:
        prev_x, prev_p = hi, _charpoly(b, hi)
        found = None
        for i in range(1, grid + 1):
            x = hi - (hi - lo_bound) * i / grid
            p = _charpoly(b, x)
            if p < 0 <= prev_p:
                found = (x, prev_x)
                break
            prev_x, prev_p = x, p
        if found is not None:
            lo, up = found
            while up - lo > tol:
                mid = (lo + up) / 2
                if _charpoly(b, mid) < 0:
                    lo = mid
                else:
                    up = mid
            return (lo + up) / 2
        grid *= 8
    raise NumericFailureError("no sign change located for the quotient root")


def quotient_spectral_radius(q: QuotientMatrix, tol: float = 1e-12) -> float:
    b = np.array(q.b, dtype=float)
    if b.size == 0:
        return 0.0
    return max(_top_root(b[np.ix_(blk, blk)], tol) for blk in _support_blocks(b))


# -- executable spectral bounds ---------------------------------------


def hong_nikiforov_bound(g: Graph) -> float:
    """Upper bound on the spectral radius from the minimum degree and
    edge count: (d-1)/2 + sqrt(2e - d n + (d+1)^2/4)."""
    if g.n == 0:
        return 0.0
    d = min_degree(g)
    radicand = 2 * g.edge_count - d * g.n + (d + 1) ** 2 / 4
    if radicand < 0:
        raise InvalidParameterError(
            "negative radicand: inconsistent edge/degree data")
    return (d - 1) / 2 + math.sqrt(radicand)


def lemma22_check(g: Graph, a: int, tol: float = DEFAULT_TOL) -> bool:
    """Instance check of: min degree >= a and rho >= n-2 force the
    complement to have at most n - ceil(a/2) - 1 edges.

    The rho >= n-2 hypothesis is triggered only when certified (lower
    enclosure bound above n-2), so a borderline rho never produces a
    spurious failure.
    """
    if min_degree(g) < a:
        return True
    result = spectral_radius(g, tol)
    lo, _hi = result.enclosure
    if lo < g.n - 2:
        return True
    comp_edges = g.n * (g.n - 1) // 2 - g.edge_count
    return comp_edges <= g.n - math.ceil(a / 2) - 1

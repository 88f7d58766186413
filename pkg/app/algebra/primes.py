"""Minimal primes of J_G.

P_T(G) is minimal exactly when T is empty or every vertex of T is a cut
point of G minus the rest of T: c(T - {i}) < c(T).  Its height is
n - c(T) + |T|.  Only this combinatorial data is produced; the prime
generators themselves are never built.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

import numpy as np

from .errors import CapExceededError
from .graphs import Graph, connected_components, members

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_CAP = 24


@dataclass(frozen=True)
class PrimeComponent:
    cut_set: Tuple[int, ...]
    components: Tuple[FrozenSet[int], ...]
    height: int

    def to_json(self) -> Dict:
        return {
            "cutSet": list(self.cut_set),
            "components": [sorted(c) for c in self.components],
            "height": self.height,
        }


@dataclass(frozen=True)
class PrimeDecomposition:
    components: Tuple[PrimeComponent, ...]
    n: int
    connected: bool

    @property
    def krull_dim(self) -> int:
        return 2 * self.n - min(p.height for p in self.components)

    def to_json(self) -> Dict:
        return {
            "components": [p.to_json() for p in self.components],
            "connected": self.connected,
            "dim": self.krull_dim,
        }


def _split(g: Graph, region: int) -> List[int]:
    comps = []
    while region:
        comp = frontier = region & -region
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = g.adj[low.bit_length()] & region & ~comp
            comp |= fresh
            frontier |= fresh
        comps.append(comp)
        region &= ~comp
    return comps


def _component_counts(g: Graph) -> np.ndarray:
    """c(T) for every removed set T, indexed by bitmask.

    Subsets are walked in Gray-code order, so each step removes or restores
    one vertex and only the components touching it are recomputed.
    """
    counts = np.zeros(1 << g.n, dtype=np.int16)
    comps = _split(g, g.full_mask)
    counts[0] = len(comps)
    prev = 0
    for k in range(1, 1 << g.n):
        mask = k ^ (k >> 1)
        flipped = mask ^ prev
        v = flipped.bit_length()
        if mask & flipped:
            # v removed: only its own component can fall apart
            home = next(c for c in comps if c & flipped)
            comps = [c for c in comps if c != home] + _split(g, home & ~flipped)
        else:
            # v restored: it joins every component it is adjacent to
            touching = [c for c in comps if c & g.adj[v]]
            merged = flipped
            for c in touching:
                merged |= c
            comps = [c for c in comps if not c & g.adj[v]] + [merged]
        counts[mask] = len(comps)
        prev = mask
    return counts


def _admissible(mask: int, counts: np.ndarray) -> bool:
    c = counts[mask]
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        if counts[mask ^ low] >= c:
            return False
    return True


def decompose(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> PrimeDecomposition:
    if g.n > cap:
        raise CapExceededError("prime enumeration", g.n, cap)
    connected = g.is_connected()
    if not connected:
        # the cut-set criterion and height formula hold on the whole graph
        logger.warning("minimal primes of a disconnected graph (%s); results combine its components", g)
    counts = _component_counts(g)
    found: List[PrimeComponent] = []
    for mask in range(1 << g.n):
        if not _admissible(mask, counts):
            continue
        T = tuple(members(mask))
        found.append(PrimeComponent(
            cut_set=T,
            components=tuple(connected_components(g, T)),
            height=g.n - int(counts[mask]) + len(T),
        ))
    found.sort(key=lambda p: (len(p.cut_set), p.cut_set))
    logger.debug("%d minimal primes out of %d subsets", len(found), 1 << g.n)
    return PrimeDecomposition(tuple(found), g.n, connected)


def minimal_primes(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> List[PrimeComponent]:
    return list(decompose(g, cap).components)


def krull_dim(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    return decompose(g, cap).krull_dim

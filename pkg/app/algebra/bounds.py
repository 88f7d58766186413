"""Regularity and Betti lower bounds from induced subgraphs.

If G_W is an induced subgraph then beta_ij(S/J_G) >= beta_ij(S/J_{G_W}), so
every induced line, cycle, T3/G3 member or clique found in G contributes
its closed-form table.  Searches are exact up to a vertex cap; above it only
a seeded random search for induced paths runs, which can under-report but
never invents a witness.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .betti import BettiTable
from .closedforms import betti_basic, betti_cycle, betti_g3, betti_t3
from .graphs import Graph, bit, component_masks, maximal_cliques, members

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_CAP = 16
DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class Witness:
    kind: str
    vertices: Tuple[int, ...]
    bound: int
    legs: Optional[Tuple[int, int, int]] = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    def label(self) -> str:
        if self.legs:
            r, s, t = self.legs
            return f"{self.kind.upper()}({r},{s},{t})"
        if self.kind == "line":
            return f"line L{self.size}"
        if self.kind == "cycle":
            return f"cycle C{self.size}"
        return f"complete K{self.size}"

    def describe(self) -> str:
        return f"induced {self.label()} on vertices {{{', '.join(map(str, self.vertices))}}}"

    def to_json(self) -> Dict:
        out = {"kind": self.kind, "vertices": list(self.vertices), "bound": self.bound}
        if self.legs:
            out["legs"] = list(self.legs)
        return out


@dataclass(frozen=True)
class RegBounds:
    lower: int
    upper: int
    witnesses: Tuple[Witness, ...] = field(default=())
    exact: bool = True

    @property
    def best(self) -> Optional[Witness]:
        return max(self.witnesses, key=lambda w: (w.bound, w.size), default=None)

    def summary(self) -> str:
        best = self.best
        via = f" via {best.describe()}" if best is not None else ""
        return f"lower={self.lower}{via}; upper={self.upper}"

    def to_json(self) -> Dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


# -- induced paths -----------------------------------------------------------

def _longest_path_exact(g: Graph) -> Tuple[int, ...]:
    best: List[int] = [1]

    def extend(path: List[int], blocked: int) -> None:
        if len(path) > len(best):
            best[:] = path
        last = path[-1]
        for v in members(g.adj[last] & ~blocked):
            path.append(v)
            extend(path, blocked | g.adj[last] | bit(v))
            path.pop()

    for s in g.vertices:
        extend([s], bit(s))
    return tuple(best)


def _longest_path_random(g: Graph, seed: int, tries: int) -> Tuple[int, ...]:
    rng = random.Random(seed)
    best: Tuple[int, ...] = (1,)
    for _ in range(tries):
        path = [rng.randint(1, g.n)]
        blocked = bit(path[0])
        while True:
            options = members(g.adj[path[-1]] & ~blocked)
            if not options:
                break
            v = rng.choice(options)
            blocked |= g.adj[path[-1]] | bit(v)
            path.append(v)
        if len(path) > len(best):
            best = tuple(path)
    return best


def induced_path(g: Graph, cap: int = DEFAULT_VERTEX_CAP, seed: int = DEFAULT_SEED) -> Tuple[int, ...]:
    """Vertices of a longest induced path, in path order."""
    if g.n <= cap:
        return _longest_path_exact(g)
    logger.warning("induced path search on %d vertices above cap %d: randomized, lower bound only", g.n, cap)
    return _longest_path_random(g, seed, tries=64 * g.n)


def longest_induced_line(g: Graph, cap: int = DEFAULT_VERTEX_CAP, seed: int = DEFAULT_SEED) -> int:
    return len(induced_path(g, cap, seed))


# -- induced cycles ----------------------------------------------------------

def induced_cycles_by_size(g: Graph) -> Dict[int, Tuple[int, ...]]:
    """One induced cycle per length, each listed from its smallest vertex."""
    found: Dict[int, Tuple[int, ...]] = {}

    def extend(path: List[int], blocked: int) -> None:
        s, last = path[0], path[-1]
        for v in members(g.adj[last] & ~blocked):
            if len(path) >= 2 and g.has_edge(v, s):
                found.setdefault(len(path) + 1, tuple(path + [v]))
                continue
            path.append(v)
            grown = blocked | bit(v) if len(path) == 2 else blocked | g.adj[last] | bit(v)
            extend(path, grown)
            path.pop()

    for s in g.vertices:
        below = bit(s) - 1
        extend([s], below | bit(s))
    return dict(sorted(found.items()))


def largest_induced_cycle(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    if g.n > cap:
        logger.warning("induced cycle search skipped: %d vertices above cap %d", g.n, cap)
        return 0
    return max(induced_cycles_by_size(g), default=0)


# -- T3 / G3 members ---------------------------------------------------------

def _leg(g: Graph, mask: int, start: int, came_from: int) -> int:
    length, prev, cur = 1, came_from, start
    while True:
        nxt = [u for u in members(g.adj[cur] & mask) if u != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


def classify_t3g3(g: Graph, mask: int) -> Optional[Tuple[str, Tuple[int, int, int]]]:
    """("t3" | "g3", (r, s, t)) when G restricted to ``mask`` is a family member.

    Legs are normalised so r >= s >= t; for T3 the u-leg carries the centre.
    """
    vs = members(mask)
    if len(vs) < 3:
        return None
    deg = {v: bin(g.adj[v] & mask).count("1") for v in vs}
    if max(deg.values()) > 3:
        return None
    if len(component_masks(g, g.full_mask & ~mask)) != 1:
        return None
    n_edges = sum(deg.values()) // 2
    if n_edges == len(vs) - 1:
        centres = [v for v in vs if deg[v] == 3]
        if len(centres) != 1:
            return None
        c = centres[0]
        legs = sorted((_leg(g, mask, u, c) for u in members(g.adj[c] & mask)), reverse=True)
        return "t3", (legs[0] + 1, legs[1], legs[2])
    if n_edges == len(vs):
        # unicyclic; the cycle must be a triangle carrying all degree-3 vertices
        tri = []
        for a in vs:
            nbrs = g.adj[a] & mask & ~((bit(a) << 1) - 1)
            for b in members(nbrs):
                tri += [(a, b, c) for c in members(nbrs & g.adj[b]) if c > b]
        if len(tri) != 1:
            return None
        corners = tri[0]
        if any(deg[v] == 3 and v not in corners for v in vs):
            return None
        legs = []
        for v in corners:
            off = [u for u in members(g.adj[v] & mask) if u not in corners]
            legs.append(1 + (_leg(g, mask, off[0], v) if off else 0))
        legs.sort(reverse=True)
        return "g3", (legs[0], legs[1], legs[2])
    return None


def induced_t3g3_by_size(g: Graph) -> Dict[Tuple[str, int], Witness]:
    found: Dict[Tuple[str, int], Witness] = {}
    for mask in range(1, 1 << g.n):
        hit = classify_t3g3(g, mask)
        if hit is None:
            continue
        kind, legs = hit
        size = bin(mask).count("1")
        found.setdefault((kind, size), Witness(kind, tuple(members(mask)), size - 2, legs))
    return dict(sorted(found.items()))


def largest_induced_t3g3(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    if g.n > cap:
        logger.warning("T3/G3 search skipped: %d vertices above cap %d", g.n, cap)
        return 0
    return max((size for _, size in induced_t3g3_by_size(g)), default=0)


# -- combined ----------------------------------------------------------------

def _witnesses(g: Graph, cap: int, seed: int) -> List[Witness]:
    path = induced_path(g, cap, seed)
    out = [Witness("line", path, len(path) - 1)]
    clique = max(maximal_cliques(g), key=len)
    out.append(Witness("complete", clique, min(len(clique) - 1, 1)))
    if g.n <= cap:
        out += [Witness("cycle", vs, k - 2) for k, vs in induced_cycles_by_size(g).items()]
        out += list(induced_t3g3_by_size(g).values())
    return out


def reg_bounds(g: Graph, cap: int = DEFAULT_VERTEX_CAP, seed: int = DEFAULT_SEED) -> RegBounds:
    """ell - 1, k_cycle - 2 and k_T3G3 - 2 below; n - 1 above."""
    ws = _witnesses(g, cap, seed)
    lower = max(w.bound for w in ws)
    return RegBounds(lower, g.n - 1, tuple(ws), exact=g.n <= cap)


def witness_table(w: Witness) -> BettiTable:
    k = w.size
    if w.kind in ("line", "complete"):
        return betti_basic(w.kind, k)
    if w.kind == "cycle":
        return betti_cycle(k)
    if w.kind == "t3":
        return betti_t3(k)
    return betti_g3(k)


def betti_lower_bounds(g: Graph, cap: int = DEFAULT_VERTEX_CAP, seed: int = DEFAULT_SEED) -> BettiTable:
    table = BettiTable({(0, 0): 1}, 2 * g.n)
    for w in _witnesses(g, cap, seed):
        table = table.entrywise_max(witness_table(w))
    return BettiTable(table.entries, 2 * g.n)

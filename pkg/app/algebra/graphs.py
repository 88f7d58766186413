"""Simple undirected graphs on vertices 1..n and the graph families we study.

Adjacency is kept as one bitset per vertex: bit ``v - 1`` of ``adj[u]`` is set
when ``{u, v}`` is an edge.  Everything here is pure; a Graph never changes
after construction.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from .errors import CapExceededError, ValidationError

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 64

FAMILY_KINDS = ("line", "cycle", "complete", "t3", "g3")

Edge = Tuple[int, int]


def bit(v: int) -> int:
    return 1 << (v - 1)


def members(mask: int) -> List[int]:
    """Vertices of a bitset, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= bit(v)
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge]
    adj: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"vertex count must be positive, got {self.n}")
        adj = [0] * (self.n + 1)
        for i, j in self.edges:
            if i == j:
                raise ValidationError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise ValidationError(f"edge {{{i},{j}}} outside 1..{self.n} or not normalised")
            adj[i] |= bit(j)
            adj[j] |= bit(i)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Build from unordered pairs, rejecting loops and duplicates."""
        seen = set()
        for pair in edges:
            a, b = (int(x) for x in pair)
            if a == b:
                raise ValidationError(f"loop at vertex {a}")
            e = (min(a, b), max(a, b))
            if e in seen:
                raise ValidationError(f"duplicate edge {{{e[0]},{e[1]}}}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> List[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] & bit(j))

    def triangle_count(self) -> int:
        count = 0
        for i, j in self.edges:
            common = self.adj[i] & self.adj[j]
            count += bin(common).count("1")
        return count // 3

    def is_connected(self) -> bool:
        return len(connected_components(self, ())) == 1

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.sorted_edges())
        return G

    def to_json(self) -> Dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def canonical_key(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __str__(self) -> str:
        body = ", ".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"Graph(n={self.n}: {body})"


def check_vertex_cap(g: Graph, cap: int = DEFAULT_MAX_VERTICES) -> Graph:
    if g.n > cap:
        raise CapExceededError("graph", g.n, cap)
    return g


def graph_from_json(data: Dict, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Parse ``{"n": int, "edges": [[i, j], ...]}`` with 1-based vertices."""
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValidationError('graph JSON must be an object with "n" and "edges"')
    try:
        n = int(data["n"])
        edges = [tuple(int(x) for x in e) for e in data["edges"]]
    except (TypeError, ValueError) as e:
        raise ValidationError(f"malformed graph JSON: {e}") from e
    for e in edges:
        if len(e) != 2:
            raise ValidationError(f"edge {list(e)} is not a pair")
        if not all(1 <= v <= n for v in e):
            raise ValidationError(f"edge {list(e)} has an endpoint outside 1..{n}")
    return check_vertex_cap(Graph.from_edges(n, edges), max_vertices)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None

    @property
    def vertex_count(self) -> int:
        if self.kind in ("t3", "g3"):
            return self.r + self.s + self.t
        return self.n

    def validate(self) -> "FamilySpec":
        if self.kind not in FAMILY_KINDS:
            raise ValidationError(f"unknown family {self.kind!r}; expected one of {', '.join(FAMILY_KINDS)}")
        if self.kind in ("line", "complete", "cycle"):
            if self.n is None:
                raise ValidationError(f"family {self.kind} needs n")
            low = 3 if self.kind == "cycle" else 1
            if self.n < low:
                raise ValidationError(f"{self.kind} requires n >= {low}, got n={self.n}")
            return self
        if None in (self.r, self.s, self.t):
            raise ValidationError(f"family {self.kind} needs r, s and t")
        r_min = 2 if self.kind == "t3" else 1
        for name, value, low in (("r", self.r, r_min), ("s", self.s, 1), ("t", self.t, 1)):
            if value < low:
                raise ValidationError(f"{self.kind} requires {name} >= {low}, got {name}={value}")
        return self

    def label(self) -> str:
        if self.kind in ("t3", "g3"):
            return f"{self.kind.upper()}({self.r},{self.s},{self.t})"
        return f"{self.kind}({self.n})"


def _path_edges(vertices: List[int]) -> List[Edge]:
    return [(a, b) for a, b in zip(vertices, vertices[1:])]


def build_family(spec: FamilySpec, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    spec.validate()
    n = spec.vertex_count
    if n > max_vertices:
        raise CapExceededError(spec.label(), n, max_vertices)
    if spec.kind == "line":
        edges = _path_edges(list(range(1, n + 1)))
    elif spec.kind == "cycle":
        edges = _path_edges(list(range(1, n + 1))) + [(1, n)]
    elif spec.kind == "complete":
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    else:
        # u_1..u_r, v_1..v_s, w_1..w_t numbered consecutively
        u = list(range(1, spec.r + 1))
        v = list(range(spec.r + 1, spec.r + spec.s + 1))
        w = list(range(spec.r + spec.s + 1, n + 1))
        edges = _path_edges(u) + _path_edges(v) + _path_edges(w)
        edges += [(u[0], v[0]), (u[0], w[0])]
        if spec.kind == "g3":
            edges.append((v[0], w[0]))
    return Graph.from_edges(n, edges)


def component_masks(g: Graph, removed_mask: int) -> List[int]:
    """Connected components of G minus ``removed_mask`` as bitsets, by min vertex."""
    remaining = g.full_mask & ~removed_mask
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = g.adj[low.bit_length()] & remaining & ~comp
            comp |= fresh
            frontier |= fresh
        comps.append(comp)
        remaining &= ~comp
    return comps


def component_count(g: Graph, removed_mask: int) -> int:
    return len(component_masks(g, removed_mask))


def _check_subset(g: Graph, vertices: Iterable[int], what: str) -> List[int]:
    vs = sorted(set(vertices))
    bad = [v for v in vs if not 1 <= v <= g.n]
    if bad:
        raise ValidationError(f"{what} contains vertices outside 1..{g.n}: {bad}")
    return vs


def connected_components(g: Graph, removed: Iterable[int]) -> List[FrozenSet[int]]:
    removed_mask = mask_of(_check_subset(g, removed, "removed set"))
    return [frozenset(members(c)) for c in component_masks(g, removed_mask)]


def is_cut_set(g: Graph, T: Iterable[int]) -> bool:
    vs = _check_subset(g, T, "cut set")
    if not vs:
        return True
    t_mask = mask_of(vs)
    c = component_count(g, t_mask)
    return all(component_count(g, t_mask & ~bit(i)) < c for i in vs)


def maximal_cliques(g: Graph) -> List[Tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting over bitsets), sorted."""
    found: List[Tuple[int, ...]] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            found.append(tuple(members(R)))
            return
        pivot = max(members(P | X), key=lambda u: bin(P & g.adj[u]).count("1"))
        for v in members(P & ~g.adj[pivot]):
            expand(R | bit(v), P & g.adj[v], X & g.adj[v])
            P &= ~bit(v)
            X |= bit(v)

    expand(0, g.full_mask, 0)
    return sorted(found)


def free_vertices(g: Graph) -> FrozenSet[int]:
    """Vertices lying in exactly one facet of the clique complex."""
    count: Dict[int, int] = {v: 0 for v in g.vertices}
    for clique in maximal_cliques(g):
        for v in clique:
            count[v] += 1
    return frozenset(v for v, c in count.items() if c == 1)


def simplicial_vertices(g: Graph) -> FrozenSet[int]:
    # neighbourhood is a clique
    out = set()
    for v in g.vertices:
        nbrs = g.adj[v]
        if all((g.adj[u] | bit(u)) & nbrs == nbrs for u in members(nbrs)):
            out.add(v)
    return frozenset(out)


def induced_subgraph(g: Graph, W: Iterable[int]) -> Graph:
    """Subgraph on W, relabelled 1..|W| preserving vertex order."""
    ws = _check_subset(g, W, "W")
    if not ws:
        raise ValidationError("induced subgraph needs a nonempty vertex set")
    relabel = {v: k for k, v in enumerate(ws, start=1)}
    edges = [(relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel]
    return Graph.from_edges(len(ws), edges)


def attach_pendant(g: Graph, v: int) -> Graph:
    """G' obtained by joining a new vertex n+1 to v."""
    _check_subset(g, [v], "pendant anchor")
    return Graph(g.n + 1, g.edges | {(v, g.n + 1)})


def graph_to_json(g: Graph) -> Dict:
    return g.to_json()

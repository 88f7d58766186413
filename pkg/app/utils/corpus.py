"""Seeded random test graphs.

The same seed always gives the same corpus, so sweeps and their stored
ledgers can be compared run to run.
"""
from __future__ import annotations
import logging
import random
from typing import List, Tuple

import networkx as nx

from ..algebra.graphs import Graph, free_vertices

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240601


def from_networkx(G: nx.Graph) -> Graph:
    """Relabel nodes 1..n in sorted order."""
    nodes = sorted(G.nodes())
    index = {v: k for k, v in enumerate(nodes, start=1)}
    return Graph.from_edges(len(nodes), [(index[a], index[b]) for a, b in G.edges()])


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    while True:
        G = nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 31))
        if nx.is_connected(G):
            return from_networkx(G)


def random_connected_graphs(count: int = 25, n_min: int = 3, n_max: int = 5,
                            seed: int = DEFAULT_SEED) -> List[Graph]:
    rng = random.Random(seed)
    graphs = [random_connected_graph(rng.randint(n_min, n_max), rng) for _ in range(count)]
    logger.debug("corpus of %d graphs from seed %d", len(graphs), seed)
    return graphs


def induced_pairs(count: int = 10, n_max: int = 5, seed: int = DEFAULT_SEED) -> List[Tuple[Graph, Tuple[int, ...]]]:
    """(G, W) pairs with G connected on 3..n_max vertices and 2 <= |W| < n."""
    rng = random.Random(seed + 1)
    pairs = []
    for _ in range(count):
        g = random_connected_graph(rng.randint(3, n_max), rng)
        k = rng.randint(2, g.n - 1)
        pairs.append((g, tuple(sorted(rng.sample(list(g.vertices), k)))))
    return pairs


def graphs_with_free_vertex(graphs: List[Graph]) -> List[Tuple[Graph, int]]:
    out = []
    for g in graphs:
        free = sorted(free_vertices(g))
        if free:
            out.append((g, free[0]))
    return out

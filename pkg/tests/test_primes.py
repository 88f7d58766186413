import networkx as nx
import pytest

from app.algebra.errors import CapExceededError
from app.algebra.graphs import FamilySpec, Graph, build_family, component_count, free_vertices, is_cut_set
from app.algebra.hilbert import hilbert_of_graph, reduce_series
from app.algebra.primes import _component_counts, decompose, krull_dim, minimal_primes
from app.utils.corpus import random_connected_graphs


def family(kind, **kw):
    return build_family(FamilySpec(kind, **kw))


def summary(g):
    return [(p.cut_set, p.height) for p in minimal_primes(g)]


def test_triangle_is_prime():
    assert summary(family("complete", n=3)) == [((), 2)]


def test_line_on_three_vertices():
    assert summary(family("line", n=3)) == [((), 2), ((2,), 2)]


def test_four_cycle():
    assert summary(family("cycle", n=4)) == [((), 3), ((1, 3), 4), ((2, 4), 4)]


def test_components_match_networkx():
    g = family("t3", r=3, s=2, t=2)
    G = g.to_networkx()
    for p in minimal_primes(g):
        assert is_cut_set(g, p.cut_set)
        H = G.copy()
        H.remove_nodes_from(p.cut_set)
        assert set(p.components) == {frozenset(c) for c in nx.connected_components(H)}
        assert p.height == g.n - len(p.components) + len(p.cut_set)


@pytest.mark.parametrize("spec, dim", [
    (FamilySpec("complete", n=3), 4),
    (FamilySpec("cycle", n=5), 6),
    (FamilySpec("t3", r=2, s=2, t=1), 7),
    (FamilySpec("g3", r=2, s=1, t=1), 5),
])
def test_krull_dim(spec, dim):
    assert krull_dim(build_family(spec)) == dim


def test_krull_dim_matches_reduced_series():
    for g in (family("cycle", n=4), family("t3", r=2, s=1, t=1),
              Graph.from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4), (2, 4)])):
        assert krull_dim(g) == reduce_series(hilbert_of_graph(g)).denom_power


def test_free_vertices_never_in_cut_sets():
    for g in (family("g3", r=3, s=2, t=1), family("t3", r=3, s=2, t=2), family("complete", n=4)):
        free = free_vertices(g)
        assert all(not (free & set(p.cut_set)) for p in minimal_primes(g))


def test_disconnected_graph():
    g = Graph.from_edges(4, [(1, 2), (3, 4)])
    d = decompose(g)
    assert not d.connected
    assert [(p.cut_set, p.height) for p in d.components] == [((), 2)]
    assert d.krull_dim == 6


def test_vertex_cap():
    with pytest.raises(CapExceededError):
        minimal_primes(family("line", n=5), cap=4)


def test_json_shape():
    data = decompose(family("cycle", n=4)).to_json()
    assert data["dim"] == 5
    assert data["connected"] is True
    assert data["components"][1] == {"cutSet": [1, 3], "components": [[2], [4]], "height": 4}


@pytest.mark.parametrize("g", random_connected_graphs(10, n_max=7) + [family("cycle", n=6), Graph.from_edges(4, [])],
                         ids=str)
def test_incremental_component_counts(g):
    counts = _component_counts(g)
    assert [int(c) for c in counts] == [component_count(g, mask) for mask in range(1 << g.n)]

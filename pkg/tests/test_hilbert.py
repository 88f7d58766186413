import pytest

from app.algebra.closedforms import betti_cycle
from app.algebra.errors import UnsupportedFamilyError, ValidationError
from app.algebra.graphs import FamilySpec, attach_pendant, build_family, free_vertices
from app.algebra.hilbert import (
    HilbertSeries,
    attach_edge_transform,
    closed_hilbert,
    hilbert_from_gb,
    hilbert_function,
    hilbert_of_graph,
    highest_coefficient,
    reduce_series,
    series_from_betti,
    standard_monomial_count,
)
from app.algebra.polyring import groebner_of_graph, initial_ideal
from app.algebra.primes import krull_dim
from app.utils.corpus import random_connected_graphs
from app.utils.verify import family_specs

CLOSED_FAMILIES = [spec for kind in ("cycle", "t3", "g3") for spec in family_specs(kind, 3, 8)]
SMALL_GRAPHS = (
    [build_family(spec) for kind in ("line", "complete", "cycle", "t3", "g3") for spec in family_specs(kind, 2, 5)]
    + random_connected_graphs(8, n_max=5)
)


def family(kind, **kw):
    return build_family(FamilySpec(kind, **kw))


def test_single_edge_series():
    H = hilbert_of_graph(family("line", n=2))
    assert H == HilbertSeries((1, 0, -1), 4)
    assert reduce_series(H) == HilbertSeries((1, 1), 3)


@pytest.mark.parametrize("spec, numerator, dim", [
    (FamilySpec("complete", n=3), (1, 2), 4),
    (FamilySpec("line", n=3), (1, 2, 1), 4),
    (FamilySpec("t3", r=2, s=1, t=1), (1, 2, 0, -2), 6),
    (FamilySpec("cycle", n=4), (1, 3, 2, -2), 5),
    (FamilySpec("g3", r=2, s=1, t=1), (1, 3, 2), 5),
])
def test_reduced_series_from_groebner_basis(spec, numerator, dim):
    H = reduce_series(hilbert_of_graph(build_family(spec)))
    assert H.numerator == numerator
    assert H.denom_power == dim


def test_raw_series_of_four_cycle():
    assert hilbert_of_graph(family("cycle", n=4)) == HilbertSeries((1, 0, -4, 0, 9, -8, 2), 8)


@pytest.mark.parametrize("spec, numerator, dim", [
    (FamilySpec("cycle", n=3), (1, 2), 4),
    (FamilySpec("cycle", n=5), (1, 4, 5, 0, -5), 6),
    (FamilySpec("g3", r=2, s=1, t=1), (1, 3, 2), 5),
    (FamilySpec("t3", r=2, s=2, t=1), (1, 3, 2, -2, -2), 7),
])
def test_closed_series(spec, numerator, dim):
    H = closed_hilbert(spec)
    assert H.numerator == numerator
    assert H.denom_power == dim


@pytest.mark.parametrize("spec", CLOSED_FAMILIES, ids=FamilySpec.label)
def test_closed_series_matches_groebner_basis(spec):
    g = build_family(spec)
    H = reduce_series(hilbert_of_graph(g))
    assert H == reduce_series(closed_hilbert(spec))
    assert krull_dim(g) == H.denom_power


def test_closed_series_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        closed_hilbert(FamilySpec("line", n=4))


def test_attach_edge_transform():
    triangle = closed_hilbert(FamilySpec("cycle", n=3))
    H = attach_edge_transform(triangle)
    assert H == HilbertSeries((1, 2, -1, -2), 6)
    assert reduce_series(H) == closed_hilbert(FamilySpec("g3", r=1, s=1, t=2))


def test_attach_edge_transform_against_groebner_basis():
    g = family("g3", r=2, s=1, t=1)
    v = min(free_vertices(g))
    g2 = attach_pendant(g, v)
    assert attach_edge_transform(hilbert_of_graph(g)) == hilbert_of_graph(g2)


def test_highest_coefficient():
    assert highest_coefficient(closed_hilbert(FamilySpec("cycle", n=5))) == 5
    assert highest_coefficient(closed_hilbert(FamilySpec("cycle", n=5)), signed=True) == -5
    assert highest_coefficient(reduce_series(hilbert_of_graph(family("cycle", n=4)))) == 2
    assert highest_coefficient(closed_hilbert(FamilySpec("cycle", n=3))) == 2


def test_hilbert_function_counts_standard_monomials():
    g = family("complete", n=3)
    B = groebner_of_graph(g)
    H = hilbert_from_gb(B, g.n)
    assert [hilbert_function(H, d) for d in range(3)] == [1, 6, 18]
    lead = initial_ideal(B)
    for d in range(2 * g.n + 1):
        assert standard_monomial_count(lead, B.ring.nvars, d) == hilbert_function(H, d)
    assert hilbert_function(reduce_series(H), 2) == 18
    with pytest.raises(ValidationError):
        hilbert_function(H, -1)


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_standard_monomial_count_matches_hilbert_function(g):
    B = groebner_of_graph(g)
    H = hilbert_from_gb(B, g.n)
    lead = initial_ideal(B)
    for d in range(g.n + 3):
        assert standard_monomial_count(lead, B.ring.nvars, d) == hilbert_function(H, d)


def test_series_from_betti_matches_groebner_basis():
    assert series_from_betti(betti_cycle(4)) == hilbert_of_graph(family("cycle", n=4))


def test_series_json():
    H = HilbertSeries((1, 2, 0, -2, 0), 6)
    assert H.numerator == (1, 2, 0, -2)
    assert H.to_json() == {"num": [1, 2, 0, -2], "denomPow": 6}
    assert HilbertSeries.from_json(H.to_json()) == H

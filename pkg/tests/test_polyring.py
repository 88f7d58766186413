import pytest

from app.algebra.errors import ValidationError
from app.algebra.graphs import FamilySpec, build_family
from app.algebra.polyring import (
    MonomialOrder,
    Ring,
    binomial_edge_ideal,
    buchberger,
    divide,
    groebner_of_graph,
    initial_ideal,
    normal_form,
    s_polynomial,
)


TEST_FAMILIES = [
    FamilySpec("line", n=4),
    FamilySpec("complete", n=4),
    FamilySpec("cycle", n=3),
    FamilySpec("cycle", n=4),
    FamilySpec("cycle", n=5),
    FamilySpec("t3", r=2, s=1, t=1),
    FamilySpec("t3", r=2, s=2, t=1),
    FamilySpec("g3", r=1, s=1, t=1),
    FamilySpec("g3", r=2, s=1, t=1),
]


def family(kind, **kw):
    return build_family(FamilySpec(kind, **kw))


def edge_binomial(ring, i, j):
    return ring.poly({
        ring.monomial(**{f"x{i}": 1, f"y{j}": 1}): 1,
        ring.monomial(**{f"x{j}": 1, f"y{i}": 1}): -1,
    })


def test_ring_rejects_composite_characteristic():
    with pytest.raises(ValidationError):
        Ring(2, prime=32000)


def test_leading_term_lex():
    ring = Ring(2, order=MonomialOrder.LEX)
    f = edge_binomial(ring, 1, 2)
    assert f.lm == ring.monomial(x1=1, y2=1)
    assert str(f) == "x1*y2 - x2*y1"


def test_leading_term_degrevlex():
    # y-variables are the smallest, so the term with the earlier y wins
    ring = Ring(2)
    f = edge_binomial(ring, 1, 2)
    assert f.lm == ring.monomial(x2=1, y1=1)


def test_binomial_edge_ideal_generators():
    ring = Ring(3, order="lex")
    gens = binomial_edge_ideal(family("line", n=3), ring)
    assert [str(g) for g in gens] == ["x1*y2 - x2*y1", "x2*y3 - x3*y2"]
    with pytest.raises(ValidationError):
        binomial_edge_ideal(family("line", n=3), Ring(4))


def test_normal_form_single_reduction():
    ring = Ring(3, order=MonomialOrder.LEX)
    g = edge_binomial(ring, 1, 2)
    f = ring.term(ring.monomial(x1=1, y2=1, y3=1))
    assert normal_form(f, [g]) == ring.term(ring.monomial(x2=1, y1=1, y3=1))
    assert normal_form(ring.term(ring.monomial(x2=1, y1=1)), [g]) == ring.term(ring.monomial(x2=1, y1=1))


def test_division_identity():
    ring = Ring(3)
    gens = binomial_edge_ideal(family("complete", n=3), ring)
    f = ring.poly({
        ring.monomial(x1=2, y2=1, y3=1): 3,
        ring.monomial(x2=1, x3=1, y1=2): -1,
        ring.monomial(x1=1): 5,
    })
    quotients, rem = divide(f, gens, track=True)
    total = rem
    for q, g in zip(quotients, gens):
        total = total + q * g
    assert total == f
    lead = [g.lm for g in gens]
    for e in rem.terms:
        assert not any(all(a <= b for a, b in zip(m, e)) for m in lead)


def test_complete_graph_generators_are_a_groebner_basis():
    for order in ("degrevlex", "lex"):
        B = groebner_of_graph(family("complete", n=4), order=order)
        assert len(B) == 6
        assert B.is_groebner()
        assert B.is_reduced()


def test_four_cycle_needs_cubic_elements():
    B = groebner_of_graph(family("cycle", n=4))
    assert len(B) > 4
    assert max(g.degree() for g in B.generators) >= 3
    assert B.is_groebner()
    assert B.is_reduced()
    for a in range(len(B)):
        for b in range(a + 1, len(B)):
            assert B.reduce(s_polynomial(B.generators[a], B.generators[b])).is_zero()


def test_groebner_basis_independent_of_generator_order():
    ring = Ring(4)
    gens = binomial_edge_ideal(family("cycle", n=4), ring)
    assert buchberger(gens) == buchberger(list(reversed(gens)))


@pytest.mark.parametrize("spec", TEST_FAMILIES, ids=FamilySpec.label)
def test_leading_monomials_agree_across_characteristics(spec):
    g = build_family(spec)
    a = groebner_of_graph(g, prime=32003)
    b = groebner_of_graph(g, prime=65537)
    assert a.leading_monomials() == b.leading_monomials()


def test_initial_ideal_of_a_single_edge():
    B = groebner_of_graph(family("line", n=2), order="lex")
    ring = B.ring
    assert initial_ideal(B) == [ring.monomial(x1=1, y2=1)]


def test_empty_ideal_needs_a_ring():
    with pytest.raises(ValidationError):
        buchberger([])
    B = buchberger([], Ring(2))
    assert len(B) == 0 and initial_ideal(B) == []


@pytest.mark.parametrize("spec", TEST_FAMILIES, ids=FamilySpec.label)
def test_normal_form_is_idempotent(spec):
    g = build_family(spec)
    B = groebner_of_graph(g)
    ring, n = B.ring, g.n
    f = (ring.term(ring.monomial(**{"x1": 2, f"y{n}": 1}), 3)
         + ring.term(ring.monomial(**{f"x{n}": 1, "y1": 1, "y2": 1}))
         + ring.term(ring.monomial(**{"x2": 1, f"y{n}": 2}), -1))
    for basis in (B.generators, binomial_edge_ideal(g, ring)):
        r = normal_form(f, basis)
        assert normal_form(r, basis) == r

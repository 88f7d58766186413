import pytest

from app.algebra.betti import BettiTable, projective_dimension, regularity
from app.algebra.closedforms import (
    AuxiliaryKind,
    betti_auxiliary,
    betti_basic,
    betti_cycle,
    betti_from_hilbert,
    betti_g3,
    betti_t3,
    c_sequence,
    closed_table,
    dual_table,
    recursion_step,
    saturation_splitting,
)
from app.algebra.errors import ShapeError, UnsupportedFamilyError, ValidationError
from app.algebra.graphs import FamilySpec
from app.algebra.hilbert import ONE_MINUS_T, closed_hilbert, series_from_betti


def test_complete_and_line():
    assert betti_basic("complete", 4).entries == {(0, 0): 1, (1, 1): 6, (2, 1): 8, (3, 1): 3}
    assert betti_basic("line", 4).entries == {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1}
    assert betti_basic("line", 2) == betti_basic("complete", 2)
    with pytest.raises(UnsupportedFamilyError):
        betti_basic("cycle", 4)


def test_c_sequence():
    assert c_sequence(5, 0) == 4
    assert c_sequence(5, 2) == 20
    assert c_sequence(6, 4) == 15
    assert c_sequence(5, 4) == 0
    with pytest.raises(ValidationError):
        c_sequence(5, 5)


def test_colon_quotient_shape():
    for n in range(3, 9):
        T = betti_auxiliary(AuxiliaryKind.COLON_QUOTIENT, n)
        assert T[(0, n - 2)] == n - 1
        assert T[(n - 1, n - 1)] == 1
        for i in range(n - 1):
            assert T[(i, n - 2)] == c_sequence(n, i)


def test_saturation_quotient():
    assert betti_auxiliary("saturationQuotient", 3).entries == {(0, 0): 1, (1, 0): 2, (2, 0): 1}
    assert betti_auxiliary(AuxiliaryKind.SATURATION_QUOTIENT, 4) == betti_basic("complete", 4)
    T = betti_auxiliary(AuxiliaryKind.SATURATION_QUOTIENT, 5)
    assert T.entries == {(0, 0): 1, (1, 1): 4, (1, 2): 4, (2, 2): 21, (3, 2): 20, (4, 2): 6}
    for n in range(4, 9):
        assert regularity(betti_auxiliary(AuxiliaryKind.SATURATION_QUOTIENT, n)) == n - 3
    with pytest.raises(ValidationError):
        betti_auxiliary(AuxiliaryKind.COLON_QUOTIENT, 2)


def test_saturation_splitting_matches_middle_columns():
    for n in range(4, 9):
        sat = betti_auxiliary(AuxiliaryKind.SATURATION_QUOTIENT, n)
        middle = BettiTable({c: b for c, b in sat if 1 <= c[0] <= n - 3}, 2 * n)
        assert saturation_splitting(n) == middle


def test_complete_graph_dual_is_colon_quotient():
    for n in range(3, 8):
        dual = dual_table(betti_basic("complete", n), n - 1, twist=2)
        assert dual == betti_auxiliary(AuxiliaryKind.COLON_QUOTIENT, n)


def test_dual_table_edge_cases():
    T = betti_cycle(5)
    assert dual_table(dual_table(T, 5, twist=1), 5, twist=1) == T
    trivial = BettiTable({(0, 0): 1}, 0)
    assert dual_table(trivial, 0) == trivial
    with pytest.raises(ShapeError):
        dual_table(betti_cycle(5), 3)


def test_cycle_tables():
    assert betti_cycle(3).entries == {(0, 0): 1, (1, 1): 3, (2, 1): 2}
    assert betti_cycle(4).entries == {(0, 0): 1, (1, 1): 4, (2, 2): 9, (3, 2): 8, (4, 2): 2}
    assert betti_cycle(5).entries == {
        (0, 0): 1, (1, 1): 5, (2, 2): 10, (2, 3): 4, (3, 3): 25, (4, 3): 20, (5, 3): 5,
    }
    assert betti_cycle(3) == betti_basic("complete", 3)
    with pytest.raises(ValidationError):
        betti_cycle(2)


@pytest.mark.parametrize("n", range(4, 10))
def test_cycle_invariants(n):
    T = betti_cycle(n)
    assert regularity(T) == n - 2
    assert projective_dimension(T) == n
    assert T[(n, n - 2)] == (n - 1) * (n - 2) // 2 - 1


def test_t3_and_g3_tables():
    assert betti_t3(4).entries == {(0, 0): 1, (1, 1): 3, (2, 2): 4, (3, 2): 2}
    assert betti_t3(5).entries == {(0, 0): 1, (1, 1): 4, (2, 2): 7, (3, 3): 4, (3, 2): 2, (4, 3): 2}
    assert betti_g3(3).entries == {(0, 0): 1, (1, 1): 3, (2, 1): 2}
    assert betti_g3(4).entries == {(0, 0): 1, (1, 1): 4, (2, 2): 3, (2, 1): 2, (3, 2): 2}


@pytest.mark.parametrize("n", range(4, 10))
def test_t3_g3_invariants(n):
    for T in (betti_t3(n), betti_g3(n)):
        assert regularity(T) == n - 2
        assert projective_dimension(T) == n - 1


def test_recursion_step():
    T = betti_t3(4)
    G = betti_g3(3)
    for k in range(1, 6):
        T = recursion_step(T)
        G = recursion_step(G)
        assert T == betti_t3(4 + k)
        assert G == betti_g3(3 + k)
    with pytest.raises(ShapeError):
        recursion_step(betti_cycle(5))


@pytest.mark.parametrize("n", range(3, 9))
def test_euler_identity_for_closed_forms(n):
    cycle = closed_hilbert(FamilySpec("cycle", n=n))
    assert betti_cycle(n).euler_polynomial() == cycle.poly * ONE_MINUS_T ** (2 * n - cycle.denom_power)
    g3 = closed_hilbert(FamilySpec("g3", r=n - 2, s=1, t=1))
    assert betti_g3(n).euler_polynomial() == g3.poly * ONE_MINUS_T ** (n - 1)
    if n >= 4:
        t3 = closed_hilbert(FamilySpec("t3", r=n - 2, s=1, t=1))
        assert betti_t3(n).euler_polynomial() == t3.poly * ONE_MINUS_T ** (n - 2)


@pytest.mark.parametrize("n", range(4, 9))
def test_betti_from_hilbert_recovers_two_row_tables(n):
    t3 = closed_hilbert(FamilySpec("t3", r=n - 2, s=1, t=1))
    g3 = closed_hilbert(FamilySpec("g3", r=n - 2, s=1, t=1))
    assert betti_from_hilbert(t3, n) == betti_t3(n)
    assert betti_from_hilbert(g3, n) == betti_g3(n)


def test_betti_from_hilbert_linear_shape():
    complete = betti_basic("complete", 5)
    assert betti_from_hilbert(series_from_betti(complete), 5, shape="linear") == complete
    with pytest.raises(ValidationError):
        betti_from_hilbert(series_from_betti(complete), 5, shape="diagonal")


def test_closed_table_dispatch():
    assert closed_table(FamilySpec("t3", r=2, s=1, t=1)) == betti_t3(4)
    assert closed_table(FamilySpec("g3", r=1, s=1, t=1)) == betti_g3(3)
    assert closed_table(FamilySpec("cycle", n=6)) == betti_cycle(6)
    assert closed_table(FamilySpec("line", n=3)) == betti_basic("line", 3)

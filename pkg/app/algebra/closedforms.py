"""Closed-form Betti tables for lines, complete graphs, cycles, T3 and G3,
the two auxiliary modules of the cycle computation, the free-vertex
recursion and table duality for Cohen-Macaulay modules.

Every binomial with an argument outside its range is zero, so the formulas
are total in n; where two Tor summands land in the same cell they are added.
"""
from __future__ import annotations

from enum import Enum
from math import comb
from typing import Dict, Iterable, List, Tuple

import sympy as sp

from .betti import BettiTable, t
from .errors import ShapeError, UnsupportedFamilyError, ValidationError
from .graphs import FamilySpec
from .hilbert import HilbertSeries, ONE_MINUS_T


def binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _table(pairs: Iterable[Tuple[Tuple[int, int], int]], n: int) -> BettiTable:
    return BettiTable.from_pairs(pairs, 2 * n)


def _at_degree(i: int, d: int, b: int) -> Tuple[Tuple[int, int], int]:
    return (i, d - i), b


def betti_basic(kind: str, n: int) -> BettiTable:
    if n < 1:
        raise ValidationError(f"{kind} requires n >= 1, got n={n}")
    if kind == "line":
        return _table((((i, i), binom(n - 1, i)) for i in range(n)), n)
    if kind == "complete":
        pairs = [((0, 0), 1)] + [((i, 1), i * binom(n, i + 1)) for i in range(1, n)]
        return _table(pairs, n)
    raise UnsupportedFamilyError(f"betti_basic covers line and complete, not {kind}")


def c_sequence(n: int, i: int) -> int:
    if not 0 <= i <= n - 1:
        raise ValidationError(f"c_i needs 0 <= i <= {n - 1}, got i={i}")
    return (n - 1 - i) * binom(n, i)


def _c(n: int, i: int) -> int:
    return c_sequence(n, i) if 0 <= i <= n - 1 else 0


class AuxiliaryKind(str, Enum):
    COLON_QUOTIENT = "colonQuotient"
    SATURATION_QUOTIENT = "saturationQuotient"


def betti_auxiliary(kind: AuxiliaryKind, n: int) -> BettiTable:
    """Tables of I_L:g/I_L and S/I_L:g for the line L on n vertices and g = x1 yn - xn y1."""
    kind = AuxiliaryKind(kind)
    if n < 3:
        raise ValidationError(f"auxiliary modules need n >= 3, got n={n}")
    if kind is AuxiliaryKind.COLON_QUOTIENT:
        pairs = [_at_degree(i, n - 2 + i, _c(n, i)) for i in range(n - 1)]
        pairs.append(_at_degree(n - 1, 2 * n - 2, 1))
        return _table(pairs, n)
    pairs = [((0, 0), 1)]
    for i in range(1, n - 2):
        pairs.append(_at_degree(i, 2 * i, binom(n - 1, i)))
        pairs.append(_at_degree(i, n - 3 + i, _c(n, i - 1)))
    pairs.append(_at_degree(n - 2, 2 * n - 5, _c(n, n - 3)))
    pairs.append(_at_degree(n - 1, 2 * n - 4, binom(n - 1, 2)))
    return _table(pairs, n)


def saturation_splitting(n: int) -> BettiTable:
    """Columns 1..n-3 of S/I_L:g rebuilt as line(n) plus the colon table shifted by one column.

    The colon entry at (k, total degree e) contributes at (k + 1, e).
    """
    if n < 3:
        raise ValidationError(f"auxiliary modules need n >= 3, got n={n}")
    line = betti_basic("line", n)
    colon = betti_auxiliary(AuxiliaryKind.COLON_QUOTIENT, n)
    pairs = [((i, j), b) for (i, j), b in line if 1 <= i <= n - 3]
    pairs += [((i + 1, j - 1), b) for (i, j), b in colon if 1 <= i + 1 <= n - 3]
    return _table(pairs, n)


def betti_cycle(n: int) -> BettiTable:
    if n < 3:
        raise ValidationError(f"cycle requires n >= 3, got n={n}")
    pairs = [((i, i), binom(n, i)) for i in range(n - 1)]
    pairs += [((i, n - 2), _c(n, i - 2)) for i in range(2, n)]
    pairs.append(((n, n - 2), binom(n - 1, 2) - 1))
    return _table(pairs, n)


def betti_t3(n: int) -> BettiTable:
    if n < 4:
        raise ValidationError(f"t3 requires n >= 4, got n={n}")
    m = n - 4
    pairs = [((i, i), binom(m, i) + 3 * binom(m, i - 1) + 4 * binom(m, i - 2)) for i in range(n - 1)]
    pairs += [((i, i - 1), 2 * binom(m, i - 3)) for i in range(1, n)]
    return _table(pairs, n)


def betti_g3(n: int) -> BettiTable:
    if n < 3:
        raise ValidationError(f"g3 requires n >= 3, got n={n}")
    m = n - 3
    pairs = [((i, i), binom(m, i) + 3 * binom(m, i - 1)) for i in range(n - 1)]
    pairs += [((i, i - 1), 2 * binom(m, i - 2)) for i in range(1, n)]
    return _table(pairs, n)


def _check_two_row(T: BettiTable) -> None:
    bad = [cell for cell in T.entries if cell[1] not in (cell[0], cell[0] - 1)]
    if bad:
        raise ShapeError(f"entries {bad} lie off the diagonal and subdiagonal")


def recursion_step(T: BettiTable) -> BettiTable:
    """Table after attaching a pendant edge at a free vertex of a two-row graph."""
    _check_two_row(T)
    pairs: List[Tuple[Tuple[int, int], int]] = list(T.entries.items())
    pairs += [((i + 1, j + 1), b) for (i, j), b in T.entries.items()]
    return BettiTable.from_pairs(pairs, T.n_vars + 2)


def dual_table(T: BettiTable, codim: int, twist: int = 0) -> BettiTable:
    """Betti table of omega(M)(twist) for a Cohen-Macaulay M of projective dimension codim.

    The entry at (i, total degree d) moves to (codim - i, total degree nVars - d - twist).
    """
    if codim < 0:
        raise ValidationError("codimension must be nonnegative")
    pairs = []
    for (i, j), b in T.entries.items():
        if i > codim:
            raise ShapeError(f"entry at homological index {i} exceeds codimension {codim}")
        k = codim - i
        pairs.append(_at_degree(k, T.n_vars - (i + j) - twist, b))
    return BettiTable.from_pairs(pairs, T.n_vars)


def euler_polynomial(T: BettiTable) -> sp.Poly:
    return T.euler_polynomial()


def betti_from_hilbert(H: HilbertSeries, n: int, shape: str = "two_row") -> BettiTable:
    """Read a table off the raw K-polynomial when its shape fixes one cell per degree.

    ``two_row``: entries at (i,i) and (i,i-1) only, so degree 2i is the
    diagonal and degree 2i-1 the subdiagonal.  ``linear``: (0,0) plus
    entries (i,1) at degree i+1.
    """
    if H.denom_power > 2 * n:
        raise ValidationError(f"series denominator {H.denom_power} exceeds 2n={2 * n}")
    raw = H.poly * ONE_MINUS_T ** (2 * n - H.denom_power)
    coeffs = [int(c) for c in reversed(raw.all_coeffs())]
    entries: Dict[Tuple[int, int], int] = {}
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        if shape == "two_row":
            i = (d + 1) // 2
            cell = (i, i) if d % 2 == 0 else (i, i - 1)
        elif shape == "linear":
            i = d - 1 if d else 0
            cell = (i, 1) if d else (0, 0)
        else:
            raise ValidationError(f"unknown table shape {shape!r}")
        b = c * (-1) ** cell[0]
        if b < 0:
            raise ShapeError(f"degree {d} coefficient {c} has the wrong sign for cell {cell}")
        entries[cell] = b
    return BettiTable(entries, 2 * n)


def closed_table(spec: FamilySpec) -> BettiTable:
    spec.validate()
    n = spec.vertex_count
    if spec.kind in ("line", "complete"):
        return betti_basic(spec.kind, n)
    if spec.kind == "cycle":
        return betti_cycle(n)
    if spec.kind == "t3":
        return betti_t3(n)
    return betti_g3(n)

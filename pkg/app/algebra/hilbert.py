"""Hilbert series of S/J_G: from a Groebner basis, from closed formulas, and
the pendant-edge transform H(G') = (1 - t^2) H(G).

A series is stored as an integer numerator (ascending coefficients) over a
power of (1 - t).  Arithmetic goes through sympy polynomials over ZZ so
coefficients never overflow.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from .betti import BettiTable, t
from .errors import UnsupportedFamilyError, ValidationError
from .graphs import FamilySpec, Graph
from .polyring import DEFAULT_PRIME, GroebnerBasis, MonomialOrder, divides, groebner_of_graph, initial_ideal

logger = logging.getLogger(__name__)

ONE = sp.Poly(1, t, domain=sp.ZZ)
ZERO = sp.Poly(0, t, domain=sp.ZZ)
ONE_MINUS_T = sp.Poly(1 - t, t, domain=sp.ZZ)
T_POLY = sp.Poly(t, t, domain=sp.ZZ)


def _coeffs(poly: sp.Poly) -> Tuple[int, ...]:
    if poly.is_zero:
        return (0,)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@dataclass(frozen=True)
class HilbertSeries:
    numerator: Tuple[int, ...]
    denom_power: int

    def __post_init__(self):
        if self.denom_power < 0:
            raise ValidationError("denominator power must be nonnegative")
        coeffs = list(int(c) for c in self.numerator) or [0]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "numerator", tuple(coeffs))

    @classmethod
    def from_poly(cls, poly: sp.Poly, denom_power: int) -> "HilbertSeries":
        return cls(_coeffs(sp.Poly(poly, t, domain=sp.ZZ)), denom_power)

    @property
    def poly(self) -> sp.Poly:
        return sp.Poly(sum(c * t ** k for k, c in enumerate(self.numerator)), t, domain=sp.ZZ)

    def to_json(self) -> Dict:
        return {"num": list(self.numerator), "denomPow": self.denom_power}

    @classmethod
    def from_json(cls, data: Dict) -> "HilbertSeries":
        return cls(tuple(data["num"]), int(data["denomPow"]))

    def __str__(self) -> str:
        return f"({format_numerator(self.numerator)})/(1-t)^{self.denom_power}"


def format_numerator(coeffs: Sequence[int]) -> str:
    parts: List[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(parts) or "0"


# -- monomial ideals ---------------------------------------------------------

def minimalize(A: np.ndarray) -> np.ndarray:
    """Drop generators divisible by another one; rows come back sorted."""
    if A.shape[0] == 0:
        return A
    A = np.unique(A, axis=0)
    A = A[np.argsort(A.sum(axis=1, dtype=np.int64), kind="stable")]
    keep: List[int] = []
    for k, row in enumerate(A):
        if keep and np.any(np.all(A[keep] <= row, axis=1)):
            continue
        keep.append(k)
    return np.unique(A[keep], axis=0)


def monomial_numerator(gens: np.ndarray, memo: Optional[Dict] = None) -> sp.Poly:
    """K-polynomial of S/I for a minimal monomial generator matrix (rows = exponents).

    Pivot splitting on a variable x shared by several generators:
    N(I) = N(I + (x)) + t * N(I : x).  Pairwise coprime generators are the
    base case, giving prod(1 - t^deg).
    """
    if memo is None:
        memo = {}
    if gens.shape[0] == 0:
        return ONE
    if np.any(gens.sum(axis=1, dtype=np.int64) == 0):
        return ZERO
    counts = np.count_nonzero(gens, axis=0)
    if counts.max() <= 1:
        out = ONE
        for deg in gens.sum(axis=1, dtype=np.int64):
            out = out * sp.Poly(1 - t ** int(deg), t, domain=sp.ZZ)
        return out
    key = (gens.shape, gens.tobytes())
    if key in memo:
        return memo[key]
    var = int(np.argmax(counts))
    unit = np.zeros((1, gens.shape[1]), dtype=gens.dtype)
    unit[0, var] = 1
    left = np.unique(np.vstack([gens[gens[:, var] == 0], unit]), axis=0)
    right = gens.copy()
    col = right[:, var]
    right[:, var] = np.where(col > 0, col - 1, 0)
    right = minimalize(right)
    result = monomial_numerator(left, memo) + T_POLY * monomial_numerator(right, memo)
    memo[key] = result
    return result


def _gens_matrix(exps: Sequence[Tuple[int, ...]], nvars: int) -> np.ndarray:
    if not exps:
        return np.zeros((0, nvars), dtype=np.uint8)
    return minimalize(np.array(exps, dtype=np.uint8))


def hilbert_from_gb(B: GroebnerBasis, n: int) -> HilbertSeries:
    """Series of S/J over (1-t)^(2n), read off the initial ideal."""
    if B.ring.n != n:
        raise ValidationError(f"basis lives in {B.ring.nvars} variables, not {2 * n}")
    memo: Dict = {}
    num = monomial_numerator(_gens_matrix(initial_ideal(B), 2 * n), memo)
    logger.debug("hilbert numerator: %d memoised splits", len(memo))
    return HilbertSeries.from_poly(num, 2 * n)


def hilbert_of_graph(g: Graph, prime: int = DEFAULT_PRIME, order=MonomialOrder.DEGREVLEX) -> HilbertSeries:
    return hilbert_from_gb(groebner_of_graph(g, prime, order), g.n)


def reduce_series(H: HilbertSeries) -> HilbertSeries:
    """Cancel (1 - t) factors; the resulting power is the Krull dimension."""
    poly = H.poly
    d = H.denom_power
    while d > 0 and not poly.is_zero and poly.eval(1) == 0:
        poly, rem = poly.div(ONE_MINUS_T)
        if not rem.is_zero:
            raise ArithmeticError("numerator vanished at t=1 but (1-t) did not divide it")
        d -= 1
    return HilbertSeries.from_poly(poly, d)


def closed_hilbert(spec: FamilySpec) -> HilbertSeries:
    spec.validate()
    n = spec.vertex_count
    if spec.kind == "cycle":
        expr = (1 + t) ** (n - 1) - t ** 2 * (1 + t) ** (n - 1) + (n - 1) * t ** n + t ** (n + 1)
        return HilbertSeries.from_poly(sp.Poly(sp.expand(expr), t), n + 1)
    if spec.kind == "t3":
        if n <= 3:
            raise ValidationError(f"t3 closed form needs n > 3, got {n}")
        return HilbertSeries.from_poly(sp.Poly(sp.expand((1 + 2 * t - 2 * t ** 3) * (1 + t) ** (n - 4)), t), n + 2)
    if spec.kind == "g3":
        if n <= 2:
            raise ValidationError(f"g3 closed form needs n > 2, got {n}")
        return HilbertSeries.from_poly(sp.Poly(sp.expand((1 + 2 * t) * (1 + t) ** (n - 3)), t), n + 1)
    raise UnsupportedFamilyError(
        f"no closed Hilbert series for family {spec.kind}; use the Betti tables in closedforms"
    )


def attach_edge_transform(H: HilbertSeries, times: int = 1) -> HilbertSeries:
    """Series after attaching ``times`` pendant edges at free vertices."""
    factor = sp.Poly((1 - t ** 2) ** times, t, domain=sp.ZZ)
    return HilbertSeries.from_poly(H.poly * factor, H.denom_power + 2 * times)


def highest_coefficient(H: HilbertSeries, signed: bool = False) -> int:
    """Leading numerator coefficient; its magnitude unless ``signed``."""
    top = H.numerator[-1]
    return top if signed else abs(top)


def hilbert_function(H: HilbertSeries, d: int) -> int:
    if d < 0:
        raise ValidationError("degree must be nonnegative")
    D = H.denom_power
    if D == 0:
        return H.numerator[d] if d < len(H.numerator) else 0
    return sum(c * comb(d - k + D - 1, D - 1) for k, c in enumerate(H.numerator) if k <= d)


def standard_monomial_count(lead: Sequence[Tuple[int, ...]], nvars: int, d: int) -> int:
    """Degree-d monomials outside the monomial ideal, by DFS with divisibility pruning."""
    lead = [tuple(e) for e in lead]
    count = 0
    exps = [0] * nvars

    def blocked() -> bool:
        return any(divides(m, exps) for m in lead)

    def visit(var: int, remaining: int) -> None:
        nonlocal count
        if var == nvars - 1:
            exps[var] = remaining
            if not blocked():
                count += 1
            exps[var] = 0
            return
        for a in range(remaining + 1):
            exps[var] = a
            if a and blocked():
                break
            visit(var + 1, remaining - a)
        exps[var] = 0

    visit(0, d)
    return count


def series_from_betti(T: BettiTable) -> HilbertSeries:
    return HilbertSeries.from_poly(T.euler_polynomial(), T.n_vars)

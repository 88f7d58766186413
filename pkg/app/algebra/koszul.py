"""Graded Betti numbers of S/J from Koszul homology.

Tor_i(K, S/J)_d is the homology of the degree-d strand

    Lambda^{i+1} V (x) (S/J)_{d-i-1} -> Lambda^i V (x) (S/J)_{d-i} -> Lambda^{i-1} V (x) (S/J)_{d-i+1}

where V is spanned by the 2n variables and S/J has the standard monomials
of a Groebner basis as K-basis.  J_G is homogeneous for the fine grading
(deg x_k = deg y_k = e_k, plus the number of x-variables), so each strand
splits into independent blocks and ranks are taken block by block.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

from .betti import BettiTable, projective_dimension, regularity
from .errors import OracleBudgetError, ValidationError
from .graphs import Graph
from .linalg import sparse_rank
from .polyring import (
    DEFAULT_PRIME,
    Exps,
    GroebnerBasis,
    MonomialOrder,
    divides,
    groebner_of_graph,
    initial_ideal,
    mul_exps,
    normal_form,
)

logger = logging.getLogger(__name__)

DEFAULT_BUDGET_NNZ = 200_000_000

# the Koszul sign convention: d(e_S (x) m) = sum_k (-1)^(k+1) e_{S - v_k} (x) v_k * m


@dataclass(frozen=True)
class GradedBasis:
    degree: int
    monomials: Tuple[Exps, ...]

    def __len__(self) -> int:
        return len(self.monomials)


class KoszulComplex:
    """Koszul complex of S/J over a fixed reduced Groebner basis.

    Holds the per-degree standard monomials, memoised normal forms of
    (variable * standard monomial) and the ranks already computed.
    """

    def __init__(self, B: GroebnerBasis, budget: int = DEFAULT_BUDGET_NNZ):
        self.B = B
        self.ring = B.ring
        self.nvars = B.ring.nvars
        self.budget = budget
        self.lead = initial_ideal(B)
        self._std: Dict[int, GradedBasis] = {}
        self._nf: Dict[Tuple[int, Exps], Dict[Exps, int]] = {}
        self._ranks: Dict[Tuple[int, int], int] = {}

    # -- quotient ring -------------------------------------------------------

    def _is_standard(self, e: Exps) -> bool:
        return not any(divides(m, e) for m in self.lead)

    def standard_monomials(self, d: int) -> GradedBasis:
        if d < 0:
            return GradedBasis(d, ())
        if d not in self._std:
            if d == 0:
                monos = [self.ring.one()]
            else:
                candidates = {
                    mul_exps(m, self.ring.unit(v))
                    for m in self.standard_monomials(d - 1).monomials
                    for v in range(self.nvars)
                }
                monos = [e for e in candidates if self._is_standard(e)]
            monos.sort(key=self.ring.key, reverse=True)
            self._std[d] = GradedBasis(d, tuple(monos))
        return self._std[d]

    def times_variable(self, v: int, m: Exps) -> Dict[Exps, int]:
        """Normal form of v * m as {standard monomial: coeff}."""
        key = (v, m)
        hit = self._nf.get(key)
        if hit is None:
            e = mul_exps(m, self.ring.unit(v))
            if self._is_standard(e):
                hit = {e: 1}
            else:
                hit = normal_form(self.ring.term(e), self.B.generators).terms
            self._nf[key] = hit
        return hit

    # -- strands -------------------------------------------------------------

    def _multidegree(self, subset: Tuple[int, ...], m: Exps) -> Tuple[int, ...]:
        n = self.ring.n
        weight = [m[k] + m[n + k] for k in range(n)]
        xs = sum(m[:n])
        for v in subset:
            weight[v % n] += 1
            if v < n:
                xs += 1
        return tuple(weight) + (xs,)

    def strand_size(self, i: int, d: int) -> int:
        if i < 0 or i > self.nvars or d - i < 0:
            return 0
        return comb(self.nvars, i) * len(self.standard_monomials(d - i))

    def _estimate(self, i: int, d: int) -> int:
        avg = (sum(len(v) for v in self._nf.values()) / len(self._nf)) if self._nf else 2.0
        return int(self.strand_size(i, d) * i * max(avg, 1.0))

    def blocks(self, i: int, d: int) -> Dict[Tuple[int, ...], List[Tuple[Tuple[int, ...], Exps]]]:
        """Basis of Lambda^i (x) (S/J)_{d-i}, grouped by fine multidegree."""
        out: Dict[Tuple[int, ...], List] = {}
        if self.strand_size(i, d) == 0:
            return out
        monos = self.standard_monomials(d - i).monomials
        for subset in combinations(range(self.nvars), i):
            for m in monos:
                out.setdefault(self._multidegree(subset, m), []).append((subset, m))
        return out

    def boundary(self, subset: Tuple[int, ...], m: Exps) -> Dict[Tuple[Tuple[int, ...], Exps], int]:
        p = self.ring.prime
        image: Dict[Tuple[Tuple[int, ...], Exps], int] = {}
        for k, v in enumerate(subset):
            sign = 1 if k % 2 == 0 else -1
            rest = subset[:k] + subset[k + 1:]
            for e, c in self.times_variable(v, m).items():
                key = (rest, e)
                val = (image.get(key, 0) + sign * c) % p
                if val:
                    image[key] = val
                else:
                    image.pop(key, None)
        return image

    def rank(self, i: int, d: int, j_label: Optional[int] = None) -> int:
        """Rank of the differential out of homological degree i in strand d."""
        if i <= 0 or i > self.nvars or d - i < 0:
            return 0
        key = (i, d)
        if key not in self._ranks:
            estimate = self._estimate(i, d)
            if estimate > self.budget:
                raise OracleBudgetError(i, d - i if j_label is None else j_label, d, estimate, self.budget)
            started = time.perf_counter()
            blocks = self.blocks(i, d)
            total = 0
            for block in blocks.values():
                vectors = [self.boundary(subset, m) for subset, m in block]
                total += sparse_rank(vectors, self.ring.prime)
            self._ranks[key] = total
            logger.info(
                "koszul strand i=%d d=%d: %d columns in %d blocks, rank %d (%.2fs)",
                i, d, self.strand_size(i, d), len(blocks), total, time.perf_counter() - started,
            )
        return self._ranks[key]

    def betti(self, i: int, j: int) -> int:
        d = i + j
        size = self.strand_size(i, d)
        if size == 0:
            return 0
        return size - self.rank(i, d, j) - self.rank(i + 1, d, j)


def standard_monomials(B: GroebnerBasis, d: int) -> GradedBasis:
    return KoszulComplex(B).standard_monomials(d)


def koszul_rank(B: GroebnerBasis, i: int, d: int) -> int:
    if not 0 <= i <= B.ring.nvars:
        raise ValidationError(f"homological index {i} outside 0..{B.ring.nvars}")
    return KoszulComplex(B).rank(i, d)


def betti_table_from_gb(
    B: GroebnerBasis,
    max_i: Optional[int] = None,
    max_j: Optional[int] = None,
    budget: int = DEFAULT_BUDGET_NNZ,
    partial: bool = False,
) -> BettiTable:
    """All beta_ij with i <= max_i and j <= max_j.

    With ``partial`` a strand over budget is recorded as a gap instead of
    aborting the whole table.
    """
    n = B.ring.n
    max_i = 2 * n if max_i is None else max_i
    max_j = n - 1 if max_j is None else max_j
    if max_j < 0:
        raise ValidationError("max_j must be nonnegative")
    cx = KoszulComplex(B, budget)
    entries: Dict[Tuple[int, int], int] = {}
    gaps: List[Tuple[int, int]] = []
    for j in range(max_j + 1):
        for i in range(min(max_i, 2 * n) + 1):
            try:
                b = cx.betti(i, j)
            except OracleBudgetError:
                if not partial:
                    raise
                logger.warning("betti (%d,%d) skipped: over budget", i, j)
                gaps.append((i, j))
                continue
            if b:
                entries[(i, j)] = b
    return BettiTable(entries, 2 * n, gaps=tuple(gaps), prime=B.field_char)


def betti_table(
    g: Graph,
    max_i: Optional[int] = None,
    max_j: Optional[int] = None,
    prime: int = DEFAULT_PRIME,
    order=MonomialOrder.DEGREVLEX,
    budget: int = DEFAULT_BUDGET_NNZ,
    partial: bool = False,
) -> BettiTable:
    return betti_table_from_gb(groebner_of_graph(g, prime, order), max_i, max_j, budget, partial)


__all__ = [
    "GradedBasis",
    "KoszulComplex",
    "betti_table",
    "betti_table_from_gb",
    "koszul_rank",
    "projective_dimension",
    "regularity",
    "standard_monomials",
]

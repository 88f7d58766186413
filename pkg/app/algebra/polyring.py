"""Polynomials over GF(p) in x1..xn, y1..yn and reduced Groebner bases.

Exponent vectors are tuples of length 2n: positions 0..n-1 hold the
x-variables and n..2n-1 the y-variables.  Variable precedence is always
x1 > ... > xn > y1 > ... > yn; the order kind picks degrevlex or lex on top.
"""
from __future__ import annotations

import heapq
import logging
import time
from dataclasses import dataclass
from enum import Enum
from operator import add, sub
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ExponentOverflowError, ValidationError
from .graphs import Graph

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 32003
CROSS_CHECK_PRIME = 65537
MAX_EXPONENT = 255

Exps = Tuple[int, ...]


class MonomialOrder(str, Enum):
    DEGREVLEX = "degrevlex"
    LEX = "lex"

    @classmethod
    def parse(cls, value) -> "MonomialOrder":
        try:
            return cls(value)
        except ValueError:
            raise ValidationError(f"unknown monomial order {value!r}; expected degrevlex or lex") from None


def _degrevlex_key(e: Exps) -> Tuple[int, ...]:
    return (sum(e),) + tuple(-a for a in reversed(e))


def _lex_key(e: Exps) -> Tuple[int, ...]:
    return e


_KEYS = {MonomialOrder.DEGREVLEX: _degrevlex_key, MonomialOrder.LEX: _lex_key}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def support_mask(e: Exps) -> int:
    m = 0
    for k, a in enumerate(e):
        if a:
            m |= 1 << k
    return m


def divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul_exps(a: Exps, b: Exps) -> Exps:
    r = tuple(map(add, a, b))
    if max(r, default=0) > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent above {MAX_EXPONENT} in {r}")
    return r


def lcm_exps(a: Exps, b: Exps) -> Exps:
    return tuple(map(max, a, b))


@dataclass(frozen=True)
class Ring:
    """K[x1..xn, y1..yn] over GF(prime) with a fixed monomial order."""

    n: int
    prime: int = DEFAULT_PRIME
    order: MonomialOrder = MonomialOrder.DEGREVLEX

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("ring needs at least one vertex")
        if not _is_prime(self.prime):
            raise ValidationError(f"field characteristic {self.prime} is not prime")
        object.__setattr__(self, "order", MonomialOrder.parse(self.order))

    @property
    def nvars(self) -> int:
        return 2 * self.n

    @property
    def key(self):
        return _KEYS[self.order]

    def one(self) -> Exps:
        return (0,) * self.nvars

    def x(self, i: int) -> int:
        return i - 1

    def y(self, i: int) -> int:
        return self.n + i - 1

    def unit(self, var: int) -> Exps:
        e = [0] * self.nvars
        e[var] = 1
        return tuple(e)

    def var_name(self, var: int) -> str:
        return f"x{var + 1}" if var < self.n else f"y{var - self.n + 1}"

    def monomial(self, **powers: int) -> Exps:
        """monomial(x1=1, y2=1) -> exponent vector."""
        e = [0] * self.nvars
        for name, power in powers.items():
            idx = int(name[1:])
            e[self.x(idx) if name[0] == "x" else self.y(idx)] += power
        return tuple(e)

    def poly(self, terms: Dict[Exps, int]) -> "Polynomial":
        return Polynomial(self, terms)

    def term(self, e: Exps, c: int = 1) -> "Polynomial":
        return Polynomial(self, {e: c})

    def format_monomial(self, e: Exps) -> str:
        parts = []
        for var, a in enumerate(e):
            if a == 1:
                parts.append(self.var_name(var))
            elif a > 1:
                parts.append(f"{self.var_name(var)}^{a}")
        return "*".join(parts) or "1"


class Polynomial:
    """Immutable sparse polynomial; coefficients are kept in 0..p-1."""

    __slots__ = ("ring", "_terms", "_sorted")

    def __init__(self, ring: Ring, terms: Dict[Exps, int]):
        p = ring.prime
        clean = {}
        for e, c in terms.items():
            c %= p
            if c:
                if len(e) != ring.nvars:
                    raise ValidationError(f"exponent vector {e} has length {len(e)}, expected {ring.nvars}")
                clean[e] = c
        self.ring = ring
        self._terms = clean
        self._sorted = None

    @property
    def terms(self) -> Dict[Exps, int]:
        return dict(self._terms)

    def sorted_terms(self) -> List[Tuple[Exps, int]]:
        if self._sorted is None:
            key = self.ring.key
            self._sorted = sorted(self._terms.items(), key=lambda item: key(item[0]), reverse=True)
        return self._sorted

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def lm(self) -> Exps:
        return self.sorted_terms()[0][0]

    @property
    def lc(self) -> int:
        return self.sorted_terms()[0][1]

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.lc == 1:
            return self
        inv = pow(self.lc, -1, self.ring.prime)
        return Polynomial(self.ring, {e: c * inv for e, c in self._terms.items()})

    def mul_term(self, e: Exps, c: int) -> "Polynomial":
        return Polynomial(self.ring, {mul_exps(m, e): a * c for m, a in self._terms.items()})

    def _check(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise ValidationError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out: Dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = mul_exps(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        p = self.ring.prime
        out = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            neg = c > p // 2
            mag = p - c if neg else c
            mono = self.ring.format_monomial(e)
            body = mono if mag == 1 else (str(mag) if mono == "1" else f"{mag}*{mono}")
            if k == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"{'-' if neg else '+'} {body}")
        return " ".join(out)

    __repr__ = __str__


def binomial_edge_ideal(g: Graph, ring: Ring) -> List[Polynomial]:
    """x_i*y_j - x_j*y_i for each edge {i, j}, i < j, in sorted edge order."""
    if ring.n != g.n:
        raise ValidationError(f"ring has {ring.n} vertices but graph has {g.n}")
    gens = []
    for i, j in g.sorted_edges():
        xi_yj = ring.monomial(**{f"x{i}": 1, f"y{j}": 1})
        xj_yi = ring.monomial(**{f"x{j}": 1, f"y{i}": 1})
        gens.append(Polynomial(ring, {xi_yj: 1, xj_yi: -1}))
    return gens


def _divisor_table(divisors: Sequence[Polynomial]):
    table = []
    for g in divisors:
        if g.is_zero():
            continue
        lm = g.lm
        table.append((lm, support_mask(lm), pow(g.lc, -1, g.ring.prime), g))
    return table


def divide(
    f: Polynomial, divisors: Sequence[Polynomial], track: bool = False
) -> Tuple[Optional[List[Polynomial]], Polynomial]:
    """Division algorithm: returns (quotients, remainder).

    The highest remaining term is treated first and reduced by the first
    divisor (in list order) whose leading monomial divides it.  Quotients
    are only assembled when ``track`` is set.
    """
    ring = f.ring
    p = ring.prime
    key = ring.key
    table = _divisor_table(divisors)
    work = dict(f._terms)
    heap = [(tuple(-k for k in key(e)), e) for e in work]
    heapq.heapify(heap)
    rem: Dict[Exps, int] = {}
    quot: List[Dict[Exps, int]] = [dict() for _ in divisors] if track else []
    index_of = {id(g): k for k, g in enumerate(divisors)}
    while heap:
        _, e = heapq.heappop(heap)
        c = work.pop(e, 0)
        if not c:
            continue
        emask = support_mask(e)
        for lm, lmask, inv_lc, g in table:
            if lmask & ~emask or not divides(lm, e):
                continue
            shift = tuple(map(sub, e, lm))
            qc = c * inv_lc % p
            for ge, gc in g._terms.items():
                te = mul_exps(ge, shift)
                if te == e:
                    continue
                nc = (work.get(te, 0) - qc * gc) % p
                if nc:
                    if te not in work:
                        heapq.heappush(heap, (tuple(-k for k in key(te)), te))
                    work[te] = nc
                else:
                    work.pop(te, None)
            if track:
                slot = quot[index_of[id(g)]]
                slot[shift] = (slot.get(shift, 0) + qc) % p
            break
        else:
            rem[e] = c
    quotients = [Polynomial(ring, q) for q in quot] if track else None
    return quotients, Polynomial(ring, rem)


def normal_form(f: Polynomial, B: Sequence[Polynomial]) -> Polynomial:
    return divide(f, B)[1]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    lcm = lcm_exps(f.lm, g.lm)
    left = f.mul_term(tuple(map(sub, lcm, f.lm)), pow(f.lc, -1, ring.prime))
    right = g.mul_term(tuple(map(sub, lcm, g.lm)), pow(g.lc, -1, ring.prime))
    return left - right


@dataclass(frozen=True)
class GroebnerBasis:
    generators: Tuple[Polynomial, ...]
    ring: Ring

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def field_char(self) -> int:
        return self.ring.prime

    def leading_monomials(self) -> List[Exps]:
        return [g.lm for g in self.generators]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.generators)

    def is_groebner(self) -> bool:
        gens = self.generators
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                if not self.reduce(s_polynomial(gens[a], gens[b])).is_zero():
                    return False
        return True

    def is_reduced(self) -> bool:
        for k, g in enumerate(self.generators):
            if g.lc != 1:
                return False
            others = [h.lm for m, h in enumerate(self.generators) if m != k]
            if any(divides(lm, e) for e in g._terms for lm in others):
                return False
        return True

    def __len__(self) -> int:
        return len(self.generators)


def _coprime(a: Exps, b: Exps) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _gm_update(polys: List[Polynomial], basis: List[int], pairs: List[Tuple[int, int]], h: int):
    """Gebauer-Moeller installation of polys[h] into (basis, pairs)."""
    lm = [polys[k].lm for k in range(len(polys))]
    lh = lm[h]
    candidates = list(basis)
    kept: List[int] = []
    while candidates:
        g1 = candidates.pop()
        l1 = lcm_exps(lh, lm[g1])
        if _coprime(lh, lm[g1]):
            kept.append(g1)
            continue
        shadowed = any(divides(lcm_exps(lh, lm[g2]), l1) for g2 in candidates) or any(
            divides(lcm_exps(lh, lm[g2]), l1) for g2 in kept
        )
        if not shadowed:
            kept.append(g1)
    new_pairs = [(g, h) for g in kept if not _coprime(lh, lm[g])]
    survivors = []
    for g1, g2 in pairs:
        l12 = lcm_exps(lm[g1], lm[g2])
        if divides(lh, l12) and lcm_exps(lm[g1], lh) != l12 and lcm_exps(lh, lm[g2]) != l12:
            continue
        survivors.append((g1, g2))
    new_basis = [g for g in basis if not divides(lh, lm[g])] + [h]
    return new_basis, survivors + new_pairs


def interreduce(polys: Iterable[Polynomial]) -> List[Polynomial]:
    """Minimal then fully reduced, monic, sorted by leading monomial (descending)."""
    polys = [p.monic() for p in polys if not p.is_zero()]
    if not polys:
        return []
    key = polys[0].ring.key
    polys.sort(key=lambda p: key(p.lm))
    minimal: List[Polynomial] = []
    for p in polys:
        if not any(divides(q.lm, p.lm) for q in minimal):
            minimal.append(p)
    reduced = []
    for k, p in enumerate(minimal):
        rest = minimal[:k] + minimal[k + 1:]
        reduced.append(normal_form(p, rest).monic())
    reduced.sort(key=lambda p: key(p.lm), reverse=True)
    return reduced


def buchberger(gens: Sequence[Polynomial], ring: Optional[Ring] = None) -> GroebnerBasis:
    """Reduced Groebner basis with the product and chain criteria."""
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValidationError("empty generator list needs an explicit ring")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValidationError("generators live in different rings")
    started = time.perf_counter()
    key = ring.key
    polys: List[Polynomial] = []
    basis: List[int] = []
    pairs: List[Tuple[int, int]] = []
    # installing in a canonical order keeps the run independent of input order
    for g in interreduce(gens):
        polys.append(g)
        basis, pairs = _gm_update(polys, basis, pairs, len(polys) - 1)
    processed = 0
    while pairs:
        pairs.sort(key=lambda pr: key(lcm_exps(polys[pr[0]].lm, polys[pr[1]].lm)), reverse=True)
        a, b = pairs.pop()
        processed += 1
        h = normal_form(s_polynomial(polys[a], polys[b]), [polys[k] for k in basis])
        if h.is_zero():
            continue
        polys.append(h.monic())
        basis, pairs = _gm_update(polys, basis, pairs, len(polys) - 1)
    result = interreduce(polys[k] for k in basis)
    logger.info(
        "buchberger: %d generators -> %d basis elements (%d pairs reduced) in %.3fs",
        len(gens), len(result), processed, time.perf_counter() - started,
    )
    return GroebnerBasis(tuple(result), ring)


def initial_ideal(B: GroebnerBasis) -> List[Exps]:
    """Minimal monomial generators of in(J), sorted descending in the order."""
    key = B.ring.key
    lms = sorted(set(B.leading_monomials()), key=key, reverse=True)
    return [e for e in lms if not any(o != e and divides(o, e) for o in lms)]


def groebner_of_graph(g: Graph, prime: int = DEFAULT_PRIME, order=MonomialOrder.DEGREVLEX) -> GroebnerBasis:
    ring = Ring(g.n, prime, MonomialOrder.parse(order))
    return buchberger(binomial_edge_ideal(g, ring), ring)

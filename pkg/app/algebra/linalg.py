"""Rank of sparse matrices over GF(p).

Vectors are dicts {row_key: coeff}.  Elimination is online: each incoming
vector is reduced against the stored pivots in the order they were created,
then stored with a pivot chosen among its entries by a Markowitz-style
rule (the row touched by the fewest vectors of the matrix).
"""
from __future__ import annotations

from collections import Counter
from typing import Dict, Hashable, List, Sequence

SparseVec = Dict[Hashable, int]


def sparse_rank(vectors: Sequence[SparseVec], p: int) -> int:
    if not vectors:
        return 0
    weight = Counter()
    for v in vectors:
        weight.update(v.keys())
    # pivot row -> (creation index, normalised vector)
    pivots: Dict[Hashable, tuple] = {}
    for vec in sorted(vectors, key=len):
        v = {k: c % p for k, c in vec.items() if c % p}
        while v:
            hits = [(pivots[k][0], k) for k in v if k in pivots]
            if not hits:
                break
            _, k = min(hits)
            coeff = v[k]
            for key, val in pivots[k][1].items():
                nv = (v.get(key, 0) - coeff * val) % p
                if nv:
                    v[key] = nv
                else:
                    v.pop(key, None)
        if not v:
            continue
        piv = min(v, key=lambda key: (weight[key], repr(key)))
        inv = pow(v[piv], -1, p)
        pivots[piv] = (len(pivots), {key: val * inv % p for key, val in v.items()})
    return len(pivots)


def dense_rank(rows: List[List[int]], p: int) -> int:
    """Plain row reduction; used by tests as an independent reference."""
    A = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = pow(A[rank][c], -1, p)
        A[rank] = [x * inv % p for x in A[rank]]
        for r in range(len(A)):
            if r != rank and A[r][c]:
                f = A[r][c]
                A[r] = [(x - f * y) % p for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank

"""Graded Betti tables: beta[i, j] = dim Tor_i(K, M)_{i+j}.

Column i is the homological index, row j the offset from the diagonal;
the total degree of an entry is i + j.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import sympy as sp

from .errors import ValidationError

Cell = Tuple[int, int]

t = sp.Symbol("t")


@dataclass(frozen=True)
class BettiTable:
    entries: Mapping[Cell, int]
    n_vars: int
    # cells the oracle could not compute within budget
    gaps: Tuple[Cell, ...] = field(default=(), compare=False)
    prime: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        clean = {}
        for (i, j), b in self.entries.items():
            if b < 0:
                raise ValidationError(f"negative Betti number at ({i},{j})")
            if b:
                clean[(int(i), int(j))] = int(b)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))
        object.__setattr__(self, "gaps", tuple(sorted(set(self.gaps))))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Cell, int]], n_vars: int, **kw) -> "BettiTable":
        acc: Dict[Cell, int] = {}
        for cell, b in pairs:
            acc[cell] = acc.get(cell, 0) + b
        return cls(acc, n_vars, **kw)

    def __getitem__(self, cell: Cell) -> int:
        return self.entries.get(cell, 0)

    def __iter__(self):
        return iter(self.entries.items())

    def __len__(self) -> int:
        return len(self.entries)

    def is_quotient_table(self) -> bool:
        """Shape of S/J for a proper ideal J: beta_00 = 1 and nothing else in column 0."""
        column0 = {cell: b for cell, b in self.entries.items() if cell[0] == 0}
        return column0 == {(0, 0): 1}

    def dominates(self, other: "BettiTable") -> bool:
        return all(self[cell] >= b for cell, b in other.entries.items())

    def entrywise_max(self, other: "BettiTable") -> "BettiTable":
        cells = set(self.entries) | set(other.entries)
        return BettiTable({c: max(self[c], other[c]) for c in cells}, max(self.n_vars, other.n_vars))

    def diff(self, other: "BettiTable") -> Dict[Cell, Tuple[int, int]]:
        cells = sorted(set(self.entries) | set(other.entries))
        return {c: (self[c], other[c]) for c in cells if self[c] != other[c]}

    def euler_polynomial(self) -> sp.Poly:
        """sum (-1)^i beta_ij t^(i+j) over the integers."""
        expr = sum(((-1) ** i) * b * t ** (i + j) for (i, j), b in self.entries.items())
        return sp.Poly(expr, t, domain=sp.ZZ)

    def to_json(self) -> Dict:
        out = {
            "entries": [{"i": i, "j": j, "b": b} for (i, j), b in self.entries.items()],
            "reg": regularity(self),
            "pd": projective_dimension(self),
        }
        if self.gaps:
            out["gaps"] = [{"i": i, "j": j} for i, j in self.gaps]
        if self.prime is not None:
            out["prime"] = self.prime
        return out

    @classmethod
    def from_json(cls, data: Dict, n_vars: int) -> "BettiTable":
        entries = {(e["i"], e["j"]): e["b"] for e in data.get("entries", [])}
        gaps = tuple((g["i"], g["j"]) for g in data.get("gaps", []))
        return cls(entries, n_vars, gaps=gaps, prime=data.get("prime"))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def diagram(self) -> str:
        return render_diagram(self)


def regularity(T: BettiTable) -> int:
    """max j with a nonzero entry (-inf convention replaced by -1 for the zero table)."""
    return max((j for (_, j) in T.entries), default=-1)


def projective_dimension(T: BettiTable) -> int:
    return max((i for (i, _) in T.entries), default=-1)


def render_diagram(T: BettiTable) -> str:
    """Macaulay2-style diagram: rows j, columns i, '.' for zero, '?' for gaps."""
    if not T.entries and not T.gaps:
        return "(zero table)"
    cells = list(T.entries) + list(T.gaps)
    i_max = max(i for i, _ in cells)
    j_min = min(j for _, j in cells)
    j_max = max(j for _, j in cells)
    gaps = set(T.gaps)

    def show(i, j):
        if (i, j) in gaps:
            return "?"
        b = T[(i, j)]
        return str(b) if b else "."

    header = [""] + [str(i) for i in range(i_max + 1)]
    rows = [[f"{j}:"] + [show(i, j) for i in range(i_max + 1)] for j in range(j_min, j_max + 1)]
    totals = ["total:"] + [str(sum(T[(i, j)] for j in range(j_min, j_max + 1))) for i in range(i_max + 1)]
    grid = [header] + rows + [totals]
    widths = [max(len(r[c]) for r in grid) for c in range(len(header))]
    lines: List[str] = []
    for r in grid:
        lines.append(" ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines)

"""One function per command: build the JSON payload shared by the CLI and the HTTP API."""
from __future__ import annotations
import logging
from typing import Callable, Dict, Optional

from flask import current_app, has_app_context

from ..algebra.betti import BettiTable
from ..algebra.bounds import betti_lower_bounds, reg_bounds
from ..algebra.closedforms import closed_table
from ..algebra.errors import ValidationError
from ..algebra.graphs import FamilySpec, Graph
from ..algebra.hilbert import HilbertSeries, closed_hilbert, hilbert_from_gb, reduce_series
from ..algebra.koszul import betti_table_from_gb
from ..algebra.polyring import MonomialOrder, groebner_of_graph
from ..algebra.primes import decompose
from ..models import cached_compute

logger = logging.getLogger(__name__)

METHODS = ("oracle", "formula", "both")
FORMS = ("raw", "reduced", "closed")


def _cached(kind: str, g: Graph, prime: int, order: str, params: Dict, fn: Callable[[], Dict]) -> Dict:
    if has_app_context() and current_app.config.get("RESULT_CACHE_ENABLED", False):
        return cached_compute(kind, g, prime, order, params, fn)
    return fn()


def _header(g: Graph, spec: Optional[FamilySpec]) -> Dict:
    out = {"graph": g.to_json()}
    if spec is not None:
        out["family"] = spec.label()
    return out


def betti_report(g: Graph, spec: Optional[FamilySpec], method: str = "oracle", prime: int = 32003,
                 order: str = "degrevlex", budget: int = 200_000_000,
                 max_i: Optional[int] = None, max_j: Optional[int] = None) -> Dict:
    if method not in METHODS:
        raise ValidationError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    if method != "oracle" and spec is None:
        raise ValidationError("the formula method needs a family (--family), not a graph file")
    order = MonomialOrder.parse(order)
    report = _header(g, spec)
    report["n"] = g.n
    if method in ("formula", "both"):
        report["formula"] = closed_table(spec).to_json()
    if method in ("oracle", "both"):
        def compute():
            B = groebner_of_graph(g, prime, order)
            return betti_table_from_gb(B, max_i, max_j, budget, partial=True).to_json()

        params = {"maxI": max_i, "maxJ": max_j, "budget": budget}
        report["oracle"] = _cached("betti", g, prime, order.value, params, compute)
    if method == "both":
        oracle = BettiTable.from_json(report["oracle"], 2 * g.n)
        formula = BettiTable.from_json(report["formula"], 2 * g.n)
        gaps = set(oracle.gaps)
        window_i = 2 * g.n if max_i is None else max_i
        window_j = g.n - 1 if max_j is None else max_j
        diff = {
            cell: pair for cell, pair in oracle.diff(formula).items()
            if cell not in gaps and cell[0] <= window_i and cell[1] <= window_j
        }
        report["match"] = not diff
        report["diff"] = [{"i": i, "j": j, "oracle": a, "formula": b} for (i, j), (a, b) in diff.items()]
    return report


def hilbert_report(g: Graph, spec: Optional[FamilySpec], form: str = "reduced", prime: int = 32003,
                   order: str = "degrevlex") -> Dict:
    if form not in FORMS:
        raise ValidationError(f"unknown form {form!r}; expected one of {', '.join(FORMS)}")
    report = _header(g, spec)
    report["form"] = form
    if form == "closed":
        if spec is None:
            raise ValidationError("the closed form needs a family (--family), not a graph file")
        H = closed_hilbert(spec)
    else:
        order = MonomialOrder.parse(order)
        raw = _cached("hilbert", g, prime, order.value, {},
                      lambda: hilbert_from_gb(groebner_of_graph(g, prime, order), g.n).to_json())
        H = HilbertSeries.from_json(raw)
        if form == "reduced":
            H = reduce_series(H)
    report["series"] = H.to_json()
    report["text"] = str(H)
    return report


def primes_report(g: Graph, spec: Optional[FamilySpec], cap: int = 24) -> Dict:
    report = _header(g, spec)
    report.update(decompose(g, cap).to_json())
    return report


def bounds_report(g: Graph, spec: Optional[FamilySpec], cap: int = 16, seed: int = 20240601) -> Dict:
    report = _header(g, spec)
    rb = reg_bounds(g, cap, seed)
    report.update(rb.to_json())
    report["summary"] = rb.summary()
    report["bettiLowerBounds"] = betti_lower_bounds(g, cap, seed).to_json()
    return report

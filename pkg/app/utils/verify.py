"""Acceptance sweep: oracle against closed forms, Euler identities, the
pendant-edge transform, dimension and monotonicity checks.

Checks are plain top-level functions returning CheckResult so they can be
shipped to worker processes; results always come back in submission order.
"""
from __future__ import annotations
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..algebra.betti import BettiTable, projective_dimension, regularity
from ..algebra.bounds import reg_bounds
from ..algebra.closedforms import betti_g3, betti_t3, closed_table, recursion_step
from ..algebra.errors import BettiLabError, CapExceededError, OracleBudgetError
from ..algebra.graphs import FamilySpec, Graph, attach_pendant, build_family, free_vertices, induced_subgraph
from ..algebra.hilbert import (
    attach_edge_transform,
    closed_hilbert,
    hilbert_from_gb,
    reduce_series,
    series_from_betti,
)
from ..algebra.koszul import betti_table_from_gb
from ..algebra.polyring import CROSS_CHECK_PRIME, DEFAULT_PRIME, MonomialOrder, groebner_of_graph
from ..algebra.primes import decompose
from ..models import db
from ..models_verify import VerificationCheck, VerificationRun
from .corpus import DEFAULT_SEED, graphs_with_free_vertex, induced_pairs, random_connected_graphs

logger = logging.getLogger(__name__)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


class Mismatch(AssertionError):
    pass


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    elapsed: float = 0.0

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"[{self.status:7}] {self.name} ({self.elapsed:.2f}s){tail}"


@dataclass(frozen=True)
class SweepOptions:
    families: Tuple[str, ...] = ("cycle", "t3", "g3")
    n_min: int = 3
    n_max: int = 5
    prime: int = DEFAULT_PRIME
    cross_prime: Optional[int] = CROSS_CHECK_PRIME
    order: str = MonomialOrder.DEGREVLEX.value
    budget: int = 200_000_000
    seed: int = DEFAULT_SEED
    corpus_size: int = 25
    pair_count: int = 10
    corpus: bool = True
    bounds_cap: int = 16


def expect(ok: bool, message: str) -> None:
    if not ok:
        raise Mismatch(message)


def _diff_text(got: BettiTable, want: BettiTable) -> str:
    cells = got.diff(want)
    return ", ".join(f"({i},{j}): oracle {a} vs formula {b}" for (i, j), (a, b) in cells.items())


def _oracle(g: Graph, opts: SweepOptions, prime: Optional[int] = None):
    B = groebner_of_graph(g, prime or opts.prime, MonomialOrder.parse(opts.order))
    return B, betti_table_from_gb(B, budget=opts.budget)


def _euler(table: BettiTable, series) -> None:
    expect(series_from_betti(table) == series,
           f"Euler identity fails: table gives {series_from_betti(table)}, GB gives {series}")


# -- individual checks -------------------------------------------------------

def check_worked_examples(opts: SweepOptions) -> str:
    cases = [
        (FamilySpec("t3", r=2, s=1, t=1), {(0, 0): 1, (1, 1): 3, (2, 2): 4, (3, 2): 2}, (1, 2, 0, -2), 6),
        (FamilySpec("g3", r=1, s=1, t=1), {(0, 0): 1, (1, 1): 3, (2, 1): 2}, (1, 2), 4),
    ]
    for spec, entries, num, dim in cases:
        g = build_family(spec)
        B, table = _oracle(g, opts)
        expect(table.entries == entries, f"{spec.label()}: table {table.entries}")
        H = reduce_series(hilbert_from_gb(B, g.n))
        expect(H.numerator == num and H.denom_power == dim, f"{spec.label()}: series {H}")
    return "t3(2,1,1) and triangle reproduced"


def check_family(spec: FamilySpec, opts: SweepOptions) -> str:
    g = build_family(spec)
    n = g.n
    B, table = _oracle(g, opts)
    want = closed_table(spec)
    expect(table == want, f"{spec.label()}: {_diff_text(table, want)}")
    raw = hilbert_from_gb(B, n)
    _euler(table, raw)
    notes = [f"reg={regularity(table)}", f"pd={projective_dimension(table)}"]
    if spec.kind in ("cycle", "t3", "g3"):
        closed = closed_hilbert(spec)
        expect(reduce_series(raw) == reduce_series(closed),
               f"{spec.label()}: series {reduce_series(raw)} vs closed {reduce_series(closed)}")
        dim = reduce_series(raw).denom_power
        expect(dim == (n + 2 if spec.kind == "t3" else n + 1), f"{spec.label()}: dim {dim}")
        expect(regularity(table) == n - 2, f"{spec.label()}: reg {regularity(table)} != {n - 2}")
        if spec.kind in ("t3", "g3"):
            expect(projective_dimension(table) == n - 1, f"{spec.label()}: pd {projective_dimension(table)}")
        notes.append(f"dim={dim}")
    if opts.cross_prime:
        _, other = _oracle(g, opts, opts.cross_prime)
        expect(other == table, f"{spec.label()}: GF({opts.prime}) and GF({opts.cross_prime}) tables differ")
        notes.append(f"GF({opts.cross_prime}) agrees")
    return ", ".join(notes)


def check_corpus_graph(index: int, g: Graph, opts: SweepOptions) -> str:
    B, table = _oracle(g, opts)
    raw = hilbert_from_gb(B, g.n)
    _euler(table, raw)
    expect(table[(1, 1)] == len(g.edges) and all(j == 1 for (i, j) in table.entries if i == 1),
           f"#{index}: column 1 is {[(c, b) for c, b in table if c[0] == 1]}")
    expect(table[(2, 1)] == 2 * g.triangle_count(),
           f"#{index}: beta_21={table[(2, 1)]}, triangles={g.triangle_count()}")
    primes = decompose(g)
    dim = reduce_series(raw).denom_power
    expect(primes.krull_dim == dim, f"#{index}: krull_dim {primes.krull_dim} vs series dim {dim}")
    free = free_vertices(g)
    clash = [p.cut_set for p in primes.components if free & set(p.cut_set)]
    expect(not clash, f"#{index}: free vertices {sorted(free)} inside cut-sets {clash}")
    return f"{g}: reg={regularity(table)} dim={dim}"


def check_pendant_transform(g: Graph, v: int, opts: SweepOptions) -> str:
    order = MonomialOrder.parse(opts.order)
    H = hilbert_from_gb(groebner_of_graph(g, opts.prime, order), g.n)
    g2 = attach_pendant(g, v)
    H2 = hilbert_from_gb(groebner_of_graph(g2, opts.prime, order), g2.n)
    expect(attach_edge_transform(H) == H2, f"{g} at {v}: {attach_edge_transform(H)} vs {H2}")
    return f"{g} + pendant at {v}"


def check_monotonicity(g: Graph, W: Tuple[int, ...], opts: SweepOptions) -> str:
    _, big = _oracle(g, opts)
    _, small = _oracle(induced_subgraph(g, W), opts)
    expect(big.dominates(small), f"{g} on W={W}: {big.entries} does not dominate {small.entries}")
    rb = reg_bounds(g, cap=opts.bounds_cap)
    reg = regularity(big)
    expect(rb.lower <= reg <= rb.upper, f"{g}: reg {reg} outside [{rb.lower}, {rb.upper}]")
    return f"W={W}: reg {reg} in [{rb.lower}, {rb.upper}]"


def check_recursion(opts: SweepOptions) -> str:
    for start, fn, n0 in ((betti_t3(4), betti_t3, 4), (betti_g3(3), betti_g3, 3)):
        table = start
        for k in range(1, 9):
            table = recursion_step(table)
            expect(table == fn(n0 + k), f"recursion from n={n0} fails at k={k}")
    return "k = 1..8 for t3 and g3"


# -- scheduling --------------------------------------------------------------

Task = Tuple[str, Callable[..., str], tuple]


def family_specs(kind: str, n_min: int, n_max: int) -> List[FamilySpec]:
    if kind in ("line", "complete", "cycle"):
        low = 3 if kind == "cycle" else 1
        return [FamilySpec(kind, n=n) for n in range(max(n_min, low), n_max + 1)]
    r_min = 2 if kind == "t3" else 1
    specs = []
    for n in range(n_min, n_max + 1):
        for r in range(r_min, n - 1):
            for s in range(1, n - r):
                specs.append(FamilySpec(kind, r=r, s=s, t=n - r - s))
    return specs


def build_tasks(opts: SweepOptions) -> List[Task]:
    tasks: List[Task] = [("worked examples", check_worked_examples, (opts,))]
    for kind in opts.families:
        for spec in family_specs(kind, opts.n_min, opts.n_max):
            tasks.append((f"family {spec.label()}", check_family, (spec, opts)))
    tasks.append(("recursion", check_recursion, (opts,)))
    if opts.corpus:
        graphs = random_connected_graphs(opts.corpus_size, seed=opts.seed)
        for k, g in enumerate(graphs):
            tasks.append((f"corpus #{k}", check_corpus_graph, (k, g, opts)))
        for k, (g, v) in enumerate(graphs_with_free_vertex(graphs)):
            tasks.append((f"pendant #{k}", check_pendant_transform, (g, v, opts)))
        for k, (g, W) in enumerate(induced_pairs(opts.pair_count, seed=opts.seed)):
            tasks.append((f"induced #{k}", check_monotonicity, (g, W, opts)))
    return tasks


def run_task(task: Task) -> CheckResult:
    name, fn, args = task
    started = time.perf_counter()
    try:
        detail = fn(*args)
        status = PASS
    except (OracleBudgetError, CapExceededError) as e:
        status, detail = SKIPPED, str(e)
    except Mismatch as e:
        status, detail = FAIL, str(e)
    except BettiLabError as e:
        status, detail = FAIL, f"{type(e).__name__}: {e}"
    result = CheckResult(name, status, detail or "", time.perf_counter() - started)
    logger.info("check %s: %s (%.2fs)", name, status, result.elapsed)
    return result


def run_verification(opts: SweepOptions, jobs: int = 1,
                     on_result: Optional[Callable[[CheckResult], None]] = None) -> List[CheckResult]:
    tasks = build_tasks(opts)
    logger.info("verification sweep: %d checks, %d job(s)", len(tasks), jobs)
    results: List[CheckResult] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for r in pool.map(run_task, tasks):
                results.append(r)
                if on_result:
                    on_result(r)
    else:
        for task in tasks:
            r = run_task(task)
            results.append(r)
            if on_result:
                on_result(r)
    return results


def overall_status(results: Sequence[CheckResult]) -> str:
    return FAIL if any(r.status == FAIL for r in results) else PASS


def save_run(results: Sequence[CheckResult], opts: SweepOptions, started_at: datetime):
    """Store a sweep in the ledger tables; needs an application context."""
    run = VerificationRun(
        started_at=started_at,
        finished_at=datetime.utcnow(),
        prime=opts.prime,
        families=",".join(opts.families),
        n_range=f"{opts.n_min}..{opts.n_max}",
        seed=opts.seed,
        status=overall_status(results),
    )
    for r in results:
        run.checks.append(VerificationCheck(name=r.name, status=r.status, detail=r.detail, elapsed=r.elapsed))
    db.session.add(run)
    db.session.commit()
    return run


def results_json(results: Sequence[CheckResult]) -> List[Dict]:
    """Timings stay in the ledger; the JSON payload must not vary between runs."""
    return [{k: v for k, v in asdict(r).items() if k != "elapsed"} for r in results]

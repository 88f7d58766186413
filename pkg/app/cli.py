"""Command line: ``flask --app run betti|hilbert|primes|bounds|verify ...``.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 budget or vertex cap exceeded.
"""
from __future__ import annotations
import functools
import json
import logging
from datetime import datetime
from typing import Dict, Optional, Tuple

import click
from flask import current_app
from flask.cli import with_appcontext

from .algebra.betti import BettiTable
from .algebra.errors import BettiLabError, CapExceededError, OracleBudgetError, ValidationError
from .algebra.graphs import FAMILY_KINDS
from .utils.graph_io import family_from_options, resolve_input
from .utils.reports import FORMS, METHODS, betti_report, bounds_report, hilbert_report, primes_report
from .utils.verify import FAIL, SweepOptions, overall_status, results_json, run_verification, save_run

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValidationError as e:
            click.echo(f"error: {e}", err=True)
            raise SystemExit(EXIT_INVALID)
        except (OracleBudgetError, CapExceededError) as e:
            click.echo(f"error: {e}", err=True)
            raise SystemExit(EXIT_BUDGET)
        except BettiLabError as e:
            current_app.logger.exception("computation failed")
            click.echo(f"error: {e}", err=True)
            raise SystemExit(EXIT_INVALID)
    return wrapper


def graph_options(fn):
    """--graph FILE | --family KIND with --n or --r/--s/--t."""
    opts = [
        click.option("--graph", "graph_path", type=click.Path(dir_okay=False), help="Graph JSON file."),
        click.option("--family", type=click.Choice(FAMILY_KINDS), help="Named graph family."),
        click.option("--n", type=int, help="Vertex count for line, cycle and complete."),
        click.option("--r", type=int, help="Leg r for t3/g3."),
        click.option("--s", type=int, help="Leg s for t3/g3."),
        click.option("--t", type=int, help="Leg t for t3/g3."),
        click.option("--json", "as_json", is_flag=True, help="Print machine-readable JSON."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _input(graph_path, family, n, r, s, t):
    spec = family_from_options(family, n, r, s, t)
    return resolve_input(graph_path=graph_path, family=spec,
                         max_vertices=current_app.config["MAX_VERTICES"])


def _cfg(value, key):
    return current_app.config[key] if value is None else value


def _emit(report: Dict) -> None:
    click.echo(json.dumps(report, sort_keys=True, indent=2))


def _title(report: Dict) -> str:
    return report.get("family") or f"graph on {report['graph']['n']} vertices"


@click.command("betti")
@graph_options
@click.option("--method", type=click.Choice(METHODS), default="oracle", show_default=True)
@click.option("--prime", type=int, help="Coefficient field characteristic.")
@click.option("--order", type=click.Choice(["degrevlex", "lex"]), help="Monomial order.")
@click.option("--budget", type=int, help="Nonzero budget per Koszul strand.")
@click.option("--max-i", type=int, help="Largest homological index.")
@click.option("--max-j", type=int, help="Largest row.")
@with_appcontext
@handle_errors
def betti_command(graph_path, family, n, r, s, t, as_json, method, prime, order, budget, max_i, max_j):
    """Graded Betti table from the Koszul oracle, the closed form, or both."""
    g, spec = _input(graph_path, family, n, r, s, t)
    report = betti_report(
        g, spec, method,
        prime=_cfg(prime, "FIELD_PRIME"),
        order=_cfg(order, "MONOMIAL_ORDER"),
        budget=_cfg(budget, "ORACLE_BUDGET_NNZ"),
        max_i=max_i, max_j=max_j,
    )
    current_app.logger.info(f"betti {_title(report)} via {method}")
    if as_json:
        _emit(report)
    else:
        click.echo(_title(report))
        for key in ("oracle", "formula"):
            if key in report:
                table = BettiTable.from_json(report[key], 2 * g.n)
                suffix = f" over GF({table.prime})" if table.prime else ""
                click.echo(f"\n{key}{suffix}:\n{table.diagram()}")
        if method == "both":
            if report["match"]:
                click.echo("\nmatch")
            for d in report["diff"]:
                click.echo(f"mismatch at ({d['i']},{d['j']}): oracle {d['oracle']}, formula {d['formula']}")
    if method == "both" and not report["match"]:
        raise SystemExit(EXIT_MISMATCH)
    if report.get("oracle", {}).get("gaps"):
        click.echo("oracle budget exhausted; '?' cells were not computed", err=True)
        raise SystemExit(EXIT_BUDGET)


@click.command("hilbert")
@graph_options
@click.option("--form", type=click.Choice(FORMS), default="reduced", show_default=True)
@click.option("--prime", type=int)
@click.option("--order", type=click.Choice(["degrevlex", "lex"]))
@with_appcontext
@handle_errors
def hilbert_command(graph_path, family, n, r, s, t, as_json, form, prime, order):
    """Hilbert series of S/J_G."""
    g, spec = _input(graph_path, family, n, r, s, t)
    report = hilbert_report(g, spec, form, _cfg(prime, "FIELD_PRIME"), _cfg(order, "MONOMIAL_ORDER"))
    if as_json:
        _emit(report)
    else:
        click.echo(report["text"])


@click.command("primes")
@graph_options
@click.option("--cap", type=int, help="Largest vertex count to enumerate.")
@with_appcontext
@handle_errors
def primes_command(graph_path, family, n, r, s, t, as_json, cap):
    """Minimal primes P_T(G) with their heights."""
    g, spec = _input(graph_path, family, n, r, s, t)
    report = primes_report(g, spec, _cfg(cap, "PRIMES_VERTEX_CAP"))
    if as_json:
        _emit(report)
        return
    if not report["connected"]:
        click.echo("warning: graph is disconnected", err=True)
    for p in report["components"]:
        comps = " ".join("{" + ",".join(map(str, c)) + "}" for c in p["components"])
        click.echo(f"T={{{','.join(map(str, p['cutSet']))}}}  height={p['height']}  components: {comps}")
    click.echo(f"{len(report['components'])} minimal primes, dim S/J_G = {report['dim']}")


@click.command("bounds")
@graph_options
@click.option("--cap", type=int, help="Largest vertex count for exact induced-subgraph search.")
@click.option("--seed", type=int, help="Seed for the randomized search above the cap.")
@with_appcontext
@handle_errors
def bounds_command(graph_path, family, n, r, s, t, as_json, cap, seed):
    """Regularity bounds from induced subgraphs."""
    g, spec = _input(graph_path, family, n, r, s, t)
    report = bounds_report(g, spec, _cfg(cap, "BOUNDS_VERTEX_CAP"), _cfg(seed, "DEFAULT_SEED"))
    if as_json:
        _emit(report)
        return
    click.echo(report["summary"])
    if not report["exact"]:
        click.echo("search above the vertex cap: lower bound from a randomized path search only", err=True)
    table = BettiTable.from_json(report["bettiLowerBounds"], 2 * g.n)
    click.echo(f"\nBetti lower bounds:\n{table.diagram()}")


def parse_n_range(text: str) -> Tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise ValidationError(f"--n expects N or LO..HI, got {text!r}") from None


@click.command("verify")
@click.option("--families", default="cycle,t3,g3", show_default=True)
@click.option("--n", "n_range", default="3..5", show_default=True, help="N or LO..HI.")
@click.option("--prime", type=int)
@click.option("--cross-prime", type=int, help="Second characteristic for the agreement check.")
@click.option("--single-prime", is_flag=True, help="Skip the second-characteristic check.")
@click.option("--budget", type=int)
@click.option("--seed", type=int)
@click.option("--jobs", type=int)
@click.option("--corpus/--no-corpus", default=True, show_default=True, help="Include the random-graph checks.")
@click.option("--save/--no-save", default=True, show_default=True, help="Store the run in the ledger.")
@click.option("--json", "as_json", is_flag=True)
@with_appcontext
@handle_errors
def verify_command(families, n_range, prime, cross_prime, single_prime, budget, seed, jobs, corpus, save, as_json):
    """Run the acceptance sweep; exit 1 if any check fails."""
    kinds = tuple(k.strip() for k in families.split(",") if k.strip())
    unknown = [k for k in kinds if k not in FAMILY_KINDS]
    if unknown:
        raise ValidationError(f"unknown families {unknown}; expected some of {', '.join(FAMILY_KINDS)}")
    lo, hi = parse_n_range(n_range)
    opts = SweepOptions(
        families=kinds, n_min=lo, n_max=hi,
        prime=_cfg(prime, "FIELD_PRIME"),
        cross_prime=None if single_prime else _cfg(cross_prime, "CROSS_CHECK_PRIME"),
        order=current_app.config["MONOMIAL_ORDER"],
        budget=_cfg(budget, "ORACLE_BUDGET_NNZ"),
        seed=_cfg(seed, "DEFAULT_SEED"),
        corpus=corpus,
        bounds_cap=current_app.config["BOUNDS_VERTEX_CAP"],
    )
    started = datetime.utcnow()
    echo = None if as_json else (lambda res: click.echo(res.line()))
    results = run_verification(opts, jobs=_cfg(jobs, "DEFAULT_JOBS"), on_result=echo)
    status = overall_status(results)
    run_id: Optional[int] = None
    if save:
        run_id = save_run(results, opts, started).id
    if as_json:
        _emit({"status": status, "checks": results_json(results)})
    else:
        counts = {s: sum(1 for r in results if r.status == s) for s in ("PASS", "FAIL", "SKIPPED")}
        click.echo(f"\n{status}: {counts['PASS']} passed, {counts['FAIL']} failed, {counts['SKIPPED']} skipped"
                   + (f" (run {run_id})" if run_id else ""))
    if status == FAIL:
        raise SystemExit(EXIT_MISMATCH)


COMMANDS = (betti_command, hilbert_command, primes_command, bounds_command, verify_command)


def register_commands(app) -> None:
    for command in COMMANDS:
        app.cli.add_command(command)

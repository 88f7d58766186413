import json

from app.cli import parse_n_range
from app.models import ComputationRecord
from app.models_verify import VerificationRun


def test_betti_both_matches(runner):
    r = runner.invoke(args=["betti", "--family", "cycle", "--n", "4", "--method", "both"])
    assert r.exit_code == 0, r.output
    assert "match" in r.output
    assert "over GF(32003)" in r.output


def test_betti_json_is_stable(runner):
    args = ["betti", "--family", "t3", "--r", "2", "--s", "1", "--t", "1", "--json"]
    first = runner.invoke(args=args)
    second = runner.invoke(args=args)
    assert first.exit_code == 0
    assert first.output == second.output
    data = json.loads(first.output)
    cells = {(e["i"], e["j"]): e["b"] for e in data["oracle"]["entries"]}
    assert cells == {(0, 0): 1, (1, 1): 3, (2, 2): 4, (3, 2): 2}
    assert data["oracle"]["reg"] == 2
    assert data["oracle"]["prime"] == 32003


def test_betti_results_are_cached(runner, app):
    args = ["betti", "--family", "g3", "--r", "1", "--s", "1", "--t", "1"]
    runner.invoke(args=args)
    runner.invoke(args=args)
    assert ComputationRecord.query.filter_by(kind="betti").count() == 1


def test_betti_from_graph_file(runner, tmp_path):
    path = tmp_path / "diamond.json"
    path.write_text(json.dumps({"n": 4, "edges": [[1, 2], [2, 3], [1, 3], [3, 4], [2, 4]]}))
    r = runner.invoke(args=["betti", "--graph", str(path), "--json"])
    assert r.exit_code == 0, r.output
    data = json.loads(r.output)
    cells = {(e["i"], e["j"]): e["b"] for e in data["oracle"]["entries"]}
    assert cells[(1, 1)] == 5
    assert cells[(2, 1)] == 4


def test_formula_needs_a_family(runner, tmp_path):
    path = tmp_path / "edge.json"
    path.write_text(json.dumps({"n": 2, "edges": [[1, 2]]}))
    r = runner.invoke(args=["betti", "--graph", str(path), "--method", "formula"])
    assert r.exit_code == 2


def test_invalid_family_exits_2(runner):
    assert runner.invoke(args=["betti", "--family", "cycle", "--n", "2"]).exit_code == 2
    assert runner.invoke(args=["primes"]).exit_code == 2


def test_budget_exhaustion_exits_3(runner):
    r = runner.invoke(args=["betti", "--family", "cycle", "--n", "3", "--budget", "1"])
    assert r.exit_code == 3
    assert "?" in r.output


def test_hilbert_forms(runner):
    r = runner.invoke(args=["hilbert", "--family", "g3", "--r", "1", "--s", "1", "--t", "1"])
    assert r.exit_code == 0
    assert r.output.strip() == "(1 + 2t)/(1-t)^4"
    r = runner.invoke(args=["hilbert", "--family", "cycle", "--n", "4", "--form", "raw"])
    assert r.output.strip() == "(1 - 4t^2 + 9t^4 - 8t^5 + 2t^6)/(1-t)^8"
    r = runner.invoke(args=["hilbert", "--family", "cycle", "--n", "5", "--form", "closed", "--json"])
    assert json.loads(r.output)["series"] == {"num": [1, 4, 5, 0, -5], "denomPow": 6}


def test_primes(runner):
    r = runner.invoke(args=["primes", "--family", "cycle", "--n", "4", "--json"])
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert [p["cutSet"] for p in data["components"]] == [[], [1, 3], [2, 4]]
    assert data["dim"] == 5
    r = runner.invoke(args=["primes", "--family", "line", "--n", "6", "--cap", "4"])
    assert r.exit_code == 3


def test_bounds(runner):
    r = runner.invoke(args=["bounds", "--family", "t3", "--r", "3", "--s", "2", "--t", "2"])
    assert r.exit_code == 0
    assert "lower=5 via induced T3(3,2,2)" in r.output
    assert "Betti lower bounds" in r.output


def test_verify_small_sweep(runner, app):
    r = runner.invoke(args=["verify", "--families", "g3", "--n", "3..3", "--no-corpus", "--single-prime"])
    assert r.exit_code == 0, r.output
    assert "PASS: 3 passed, 0 failed, 0 skipped" in r.output
    run = VerificationRun.query.one()
    assert run.status == "PASS"
    assert [c.name for c in run.checks] == ["worked examples", "family G3(1,1,1)", "recursion"]


def test_verify_json_is_stable(runner):
    args = ["verify", "--json", "--no-corpus", "--families", "cycle", "--n", "3"]
    first = runner.invoke(args=args)
    second = runner.invoke(args=args)
    assert first.exit_code == 0, first.output
    assert first.output == second.output
    data = json.loads(first.output)
    assert data["status"] == "PASS"
    assert "elapsed" not in data["checks"][0]
    assert VerificationRun.query.count() == 2


def test_verify_rejects_unknown_family(runner):
    r = runner.invoke(args=["verify", "--families", "wheel"])
    assert r.exit_code == 2


def test_parse_n_range():
    assert parse_n_range("3..5") == (3, 5)
    assert parse_n_range("4") == (4, 4)

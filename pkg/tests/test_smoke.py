def test_health(client):
    r = client.get("/api/health")
    assert r.status_code == 200
    assert r.get_json() == {"status": "ok", "prime": 32003, "order": "degrevlex"}


def test_betti_endpoint(client):
    r = client.post("/api/betti", json={"family": "g3", "r": 1, "s": 1, "t": 1, "method": "both"})
    assert r.status_code == 200
    data = r.get_json()
    assert data["match"] is True
    assert data["family"] == "G3(1,1,1)"
    assert {(e["i"], e["j"]): e["b"] for e in data["formula"]["entries"]} == {(0, 0): 1, (1, 1): 3, (2, 1): 2}


def test_betti_endpoint_inline_graph(client):
    r = client.post("/api/betti", json={"graph": {"n": 3, "edges": [[1, 2], [2, 3]]}})
    assert r.status_code == 200
    cells = {(e["i"], e["j"]): e["b"] for e in r.get_json()["oracle"]["entries"]}
    assert cells == {(0, 0): 1, (1, 1): 2, (2, 2): 1}


def test_invalid_input_is_400(client):
    r = client.post("/api/betti", json={"family": "cycle", "n": 2})
    assert r.status_code == 400
    assert r.get_json()["kind"] == "ValidationError"
    assert client.post("/api/betti", data="not json").status_code == 400
    r = client.post("/api/betti", json={"family": "cycle", "n": 4, "graph": {"n": 2, "edges": []}})
    assert r.status_code == 400


def test_hilbert_endpoint(client):
    r = client.post("/api/hilbert", json={"family": "t3", "r": 2, "s": 1, "t": 1})
    assert r.status_code == 200
    assert r.get_json()["text"] == "(1 + 2t - 2t^3)/(1-t)^6"


def test_primes_endpoint(client):
    r = client.post("/api/primes", json={"family": "cycle", "n": 4})
    assert r.status_code == 200
    assert r.get_json()["dim"] == 5
    r = client.post("/api/primes", json={"family": "cycle", "n": 4, "cap": 2})
    assert r.status_code == 422
    assert r.get_json()["kind"] == "CapExceededError"


def test_bounds_endpoint(client):
    r = client.post("/api/bounds", json={"family": "cycle", "n": 5})
    assert r.status_code == 200
    data = r.get_json()
    assert (data["lower"], data["upper"]) == (3, 4)
    assert data["summary"].startswith("lower=3 via induced")


def test_ledger_lists_runs(client, runner):
    assert client.get("/ledger/runs").get_json() == {"runs": []}
    runner.invoke(args=["verify", "--families", "g3", "--n", "3..3", "--no-corpus", "--single-prime"])
    runs = client.get("/ledger/runs").get_json()["runs"]
    assert len(runs) == 1 and runs[0]["counts"]["PASS"] == 3
    detail = client.get(f"/ledger/runs/{runs[0]['id']}").get_json()
    assert len(detail["checks"]) == 3
    assert client.get("/ledger/runs/999").status_code == 404

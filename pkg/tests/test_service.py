import pytest
from fastapi.testclient import TestClient

from sketchlab.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health_lists_builtin_logics(client):
    body = client.get("/health").json()
    assert body["ok"] and body["logics"] == ["dec", "eq", "eq*", "mp"]


def test_check_endpoint_roundtrip(client):
    r = client.post("/check", json={"document": "spec s over eq { Type: X }"})
    assert r.status_code == 200 and r.json()["ok"]


def test_parse_errors_become_400(client):
    r = client.post("/check", json={"document": "spec broken"})
    assert r.status_code == 400
    assert "expected" in r.json()["detail"]


def test_saturate_endpoint(client):
    doc = "spec endo over eq { Type: X Term: f dom(f) = X cod(f) = X }"
    r = client.post("/saturate", json={"document": doc, "logic": "eq",
                                       "depth": 2})
    body = r.json()
    assert body["status"] == "fixpoint"


def test_entail_endpoint_refutes(client):
    doc = """
        spec one over eq { Type: X }
        spec two over eq { Type: X, Y }
        morphism inc { source one target two }
    """
    r = client.post("/entail", json={"document": doc, "logic": "eq",
                                     "depth": 2})
    body = r.json()
    assert body["status"] == "refuted" and not body["ok"]


def test_eval_endpoint_respects_order(client):
    payload = {"program": "pair(x := 1, x)", "state": {"x": 0}}
    left = client.post("/eval", json={**payload, "order": "left"}).json()
    right = client.post("/eval", json={**payload, "order": "right"}).json()
    assert left["value"] == [1, 1] and right["value"] == [1, 0]


def test_translate_endpoint(client):
    doc = "spec m over dec { Type: A TermM: f m_dom(f) = A m_cod(f) = A }"
    far = client.post("/translate", json={"document": doc, "via": "far"}).json()
    near = client.post("/translate", json={"document": doc, "via": "near"}).json()
    assert far["spec"]["carriers"]["Term"] == ["f"]
    assert "S×A" in near["spec"]["carriers"]["Type"]


def test_demo_endpoints(client):
    mp = client.post("/demo/mp").json()
    assert any("pB" in line for line in mp["lines"])
    seq = client.post("/demo/seqprod").json()
    assert seq["result"] == {"state": 5, "values": [2, 20]}
    assert client.post("/demo/nope").status_code == 400


def test_validation_errors_are_422(client):
    r = client.post("/saturate", json={"document": "x", "budget": -1})
    assert r.status_code == 422

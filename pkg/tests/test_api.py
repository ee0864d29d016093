"""
Tests for the HTTP API
"""

import pytest
from fastapi.testclient import TestClient

from app.main import app

BASE_URL = "/api/v1"


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["docs"] == "/docs"


def test_health(client):
    response = client.get(f"{BASE_URL}/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_gw_invariant(client):
    data = {"d": 2, "n": 4, "lambda": [1], "mu": [2, 1], "nu": [2, 2], "k": 1}
    response = client.post(f"{BASE_URL}/gw/invariant", json=data)
    assert response.status_code == 200
    row = response.json()
    assert row["lambda"] == [1]
    assert row["value"] == row["vi_value"] == 1


def test_gw_table(client):
    response = client.post(f"{BASE_URL}/gw/table", json={"d": 2, "n": 4})
    assert response.status_code == 200
    rows = response.json()
    assert rows and all(row["value"] == row["vi_value"] for row in rows)
    assert any(row["k"] == 2 and row["lambda"] == [2, 2] and row["mu"] == [2, 2] for row in rows)


def test_ring_pieri(client):
    response = client.post(f"{BASE_URL}/ring/pieri", json={"d": 2, "n": 4, "k": 2, "lambda": [2, 2]})
    assert response.status_code == 200
    assert response.json()["terms"] == [{"k": 1, "lambda": [2], "coeff": "1"}]


def test_ring_multiply(client):
    response = client.post(f"{BASE_URL}/ring/multiply", json={"d": 2, "n": 4, "lambda": [2, 1], "mu": [2, 1]})
    assert response.status_code == 200
    terms = response.json()["terms"]
    assert {(term["k"], tuple(term["lambda"])) for term in terms} == {(1, (2,)), (1, (1, 1))}


def test_point_defaults_to_positive_point(client):
    response = client.post(f"{BASE_URL}/points", json={"d": 2, "n": 4, "t": 1.0})
    assert response.status_code == 200
    payload = response.json()
    assert payload["I"] == ["-1/2", "1/2"]
    assert payload["stratum"] == []
    assert payload["x"][0][0] == pytest.approx(2 ** 0.5)


def test_point_with_bad_index(client):
    response = client.post(f"{BASE_URL}/points", json={"d": 2, "n": 4, "index": ["1/3", "1/2"]})
    assert response.status_code == 400
    assert response.json()["detail"]["error"] == "OutsideBoxError"


def test_factorize(client):
    response = client.post(f"{BASE_URL}/factorize", json={"d": 3, "n": 6, "t": 0.5})
    assert response.status_code == 200
    payload = response.json()
    assert len(payload["grid"]["a"]) == 9
    assert payload["closed_form_deviation"] < 1e-9


def test_factorize_needs_positive_scale(client):
    response = client.post(f"{BASE_URL}/factorize", json={"d": 2, "n": 4, "t": 0})
    assert response.status_code == 422


@pytest.mark.parametrize("check", ["orthogonality3", "row-char", "duality", "classical", "oracle"])
def test_verify(client, check):
    response = client.post(f"{BASE_URL}/verify", json={"d": 2, "n": 5, "check": check})
    assert response.status_code == 200
    assert response.json()["passed"]


def test_verify_unknown_check(client):
    response = client.post(f"{BASE_URL}/verify", json={"d": 2, "n": 5, "check": "nonsense"})
    assert response.status_code == 400
    assert response.json()["detail"]["error"] == "QGrassError"


def test_invalid_box(client):
    response = client.post(f"{BASE_URL}/gw/table", json={"d": 4, "n": 4})
    assert response.status_code == 422


def test_inequality(client):
    response = client.post(f"{BASE_URL}/inequality", json={"n_max": 5})
    assert response.status_code == 200
    reports = response.json()
    assert len(reports) == 10
    assert all(report["passed"] for report in reports)

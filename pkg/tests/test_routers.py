import inspect

import pytest
from fastapi.testclient import TestClient

from main import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_root_and_health(client):
    assert client.get("/health").json()["status"] == "healthy"
    assert "series" in client.get("/api/info").json()["available_endpoints"]


def test_series(client):
    response = client.get("/api/v1/series", params={"n": 2, "D": 4})
    assert response.status_code == 200
    body = response.json()
    assert body["success"] is True
    assert body["data"]["hilbert"] == [1, 2, 4, 6, 9]


def test_quotient(client):
    response = client.get("/api/v1/quotient", params={"n": 3, "l": 2})
    assert response.status_code == 200
    data = response.json()["data"]
    assert data["dims"] == [3, 3]
    assert [b["label"] for b in data["basis"]] == ["x1", "x2", "x3", "x12", "x13", "x23"]


def test_quotient_errors(client):
    assert client.get("/api/v1/quotient", params={"n": 1, "l": 2}).status_code == 422
    response = client.get("/api/v1/quotient", params={"n": 3, "l": 99})
    assert response.status_code == 400


def test_koszul(client):
    response = client.get("/api/v1/koszul", params={"n": 3, "max_p": 2})
    assert response.status_code == 200
    assert response.json()["data"]["w_dims"] == [3, 5]


def test_orbit(client):
    payload = {"algebra": {"n": 3, "l": 3}, "coords": {"x112": "1", "x123": "1"}}
    response = client.post("/api/v1/orbit", json=payload)
    assert response.status_code == 200
    data = response.json()["data"]
    assert data["weight"] == 3
    assert data["dim"] == 11


def test_orbit_rejects_bad_label(client):
    payload = {"algebra": {"n": 3, "l": 3}, "coords": {"x332": "1"}}
    assert client.post("/api/v1/orbit", json=payload).status_code == 400
    payload = {"algebra": {"n": 3, "l": 3}, "coords": {"x1": "1/0"}}
    assert client.post("/api/v1/orbit", json=payload).status_code == 422


def test_weylmap_with_pullback(client):
    payload = {
        "functional": {"algebra": {"n": 2, "l": 2}, "coords": {"x12": "1"}},
        "pullback_degree": 3,
    }
    response = client.post("/api/v1/weylmap", json=payload)
    assert response.status_code == 200
    data = response.json()["data"]
    assert data["images"]["x2"] == [[[[0], [1]], "-1"]]
    assert data["pullback"]["monomials"] == [[0], [1], [2], [3]]
    assert data["surjectivity"] == "surjective"


def test_computation_handlers_are_synchronous():
    endpoints = [r.endpoint for r in app.routes if getattr(r, "path", "").startswith("/api/v1/")]
    assert len(endpoints) == 5
    assert not any(inspect.iscoroutinefunction(e) for e in endpoints)

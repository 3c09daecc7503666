import json

import pytest
from fastapi.testclient import TestClient

from propercube.service.app import create_app
from propercube.service.schemas import (
    CountResponse,
    DistanceResponse,
    TableResponse,
    VerifyResponse,
)

EXAMPLE = {"n": 7, "coloring": "j=4", "u": "0101000", "v": "0011111"}


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


class TestHealth:
    def test_healthz(self, client):
        data = client.get("/healthz").json()
        assert data["service"] == "propercube"
        assert data["version"]


class TestDistance:
    def test_worked_pair(self, client):
        resp = client.post("/distance", json=EXAMPLE)
        assert resp.status_code == 200
        assert resp.json() == {"o": 2, "t": 3, "gamma": 1, "pd": 5}

    def test_equal_vertices(self, client):
        resp = client.post(
            "/distance", json={"n": 4, "coloring": "j=2", "u": "0110", "v": "0110"}
        )
        assert resp.json()["pd"] == 0

    def test_general_coloring(self, client):
        resp = client.post(
            "/distance", json={"n": 5, "coloring": "1,2", "u": "11100", "v": "00000"}
        )
        assert resp.json() == {"o": 2, "t": 1, "gamma": 1, "pd": 3}

    def test_bad_vertex_is_422(self, client):
        resp = client.post("/distance", json={**EXAMPLE, "u": "01X1000"})
        assert resp.status_code == 422
        assert "position 3" in json.dumps(resp.json())

    def test_length_mismatch_is_422(self, client):
        resp = client.post("/distance", json={**EXAMPLE, "u": "0101"})
        assert resp.status_code == 422

    def test_bad_coloring_is_422(self, client):
        resp = client.post("/distance", json={**EXAMPLE, "coloring": "j=7"})
        assert resp.status_code == 422

    def test_round_trip_model(self, client):
        data = client.post("/distance", json=EXAMPLE).json()
        assert DistanceResponse.model_validate(data).model_dump() == data


class TestCount:
    def test_formula_only(self, client):
        data = client.post("/count", json=EXAMPLE).json()
        assert data == {"pp": "12"}
        assert isinstance(data["pp"], str)

    def test_with_oracle(self, client):
        data = client.post("/count", json={**EXAMPLE, "oracle": True}).json()
        assert data == {"pp": "12", "oracle": "12", "agree": True}

    def test_adjacent(self, client):
        data = client.post(
            "/count", json={"n": 4, "coloring": "j=2", "u": "0000", "v": "0001"}
        ).json()
        assert data["pp"] == "1"

    def test_balanced(self, client):
        data = client.post(
            "/count", json={"n": 4, "coloring": "j=2", "u": "1111", "v": "0000"}
        ).json()
        assert data["pp"] == "8"

    def test_budget_exceeded_is_400(self, client):
        payload = {"n": 4, "coloring": "j=2", "u": "1111", "v": "0000",
                   "oracle": True, "budget": 5}
        resp = client.post("/count", json=payload)
        assert resp.status_code == 400
        assert "5" in resp.json()["detail"]

    def test_counts_are_decimal_strings_even_when_huge(self, client):
        # 2 * (10!)^2 would overflow doubles; must arrive intact
        payload = {"n": 20, "coloring": "j=10", "u": "1" * 20, "v": "0" * 20}
        data = client.post("/count", json=payload).json()
        assert data["pp"] == str(2 * 3628800**2)

    def test_round_trip_model(self, client):
        data = client.post("/count", json={**EXAMPLE, "oracle": True}).json()
        assert CountResponse.model_validate(data).model_dump() == data


class TestEnumerate:
    def post_lines(self, client, payload):
        with client.stream("POST", "/enumerate", json=payload) as resp:
            assert resp.status_code == 200
            assert resp.headers["content-type"].startswith("application/x-ndjson")
            return [json.loads(line) for line in resp.iter_lines() if line.strip()]

    def test_golden_pair(self, client):
        lines = self.post_lines(
            client, {"n": 5, "coloring": "1,2", "u": "11100", "v": "00000"}
        )
        assert lines[-1] == {"total": 2}
        assert [r["flips"] for r in lines[:-1]] == [[1, 3, 2], [2, 3, 1]]
        assert lines[0]["vertices"][0] == "11100"
        assert lines[0]["vertices"][-1] == "00000"

    def test_limit(self, client):
        lines = self.post_lines(client, {**EXAMPLE, "limit": 3})
        assert lines[-1] == {"total": 3}
        assert len(lines) == 4

    def test_equal_vertices(self, client):
        lines = self.post_lines(
            client, {"n": 4, "coloring": "j=2", "u": "0110", "v": "0110"}
        )
        assert lines == [{"flips": [], "vertices": ["0110"]}, {"total": 1}]

    def test_worked_pair_first_path(self, client):
        lines = self.post_lines(client, {**EXAMPLE, "limit": 1})
        assert lines[0]["flips"] == [5, 2, 6, 3, 7]
        assert len(lines[0]["vertices"]) == 6

    def test_bad_request_is_422(self, client):
        resp = client.post("/enumerate", json={**EXAMPLE, "u": "xxx"})
        assert resp.status_code == 422


class TestTable:
    def test_j1_table(self, client):
        data = client.post("/table", json={"n": 3, "coloring": "j=1"}).json()
        assert data["n"] == 3 and data["coloring"] == "j=1"
        rows = {(r["o"], r["t"]): r for r in data["rows"]}
        assert len(rows) == 2 * 3
        assert rows[(1, 2)]["pd"] == 3 and rows[(1, 2)]["pp"] == "2"
        assert rows[(0, 0)] == {"o": 0, "t": 0, "gamma": 0, "pd": 0, "pp": "1"}

    def test_wide_profile(self, client):
        data = client.post("/table", json={"n": 6, "coloring": "j=3"}).json()
        rows = {(r["o"], r["t"]): r for r in data["rows"]}
        assert rows[(3, 1)]["pd"] == 6 and rows[(3, 1)]["pp"] == "84"

    def test_round_trip_model(self, client):
        data = client.post("/table", json={"n": 4, "coloring": "j=2"}).json()
        assert TableResponse.model_validate(data).model_dump() == data

    def test_bad_coloring_is_422(self, client):
        resp = client.post("/table", json={"n": 4, "coloring": "j=0"})
        assert resp.status_code == 422


class TestVerify:
    def test_small_pass(self, client):
        data = client.post("/verify", json={"max_n": 3}).json()
        assert data["passed"] is True
        assert data["mismatches"] == []
        assert data["checked"] > 0

    def test_negative_control_fails(self, client):
        data = client.post("/verify", json={"max_n": 3, "negative_control": True}).json()
        assert data["passed"] is False
        assert any(m["n"] == 3 and m["coloring"] == "j=1" for m in data["mismatches"])

    def test_bad_colorings_spec_is_422(self, client):
        resp = client.post("/verify", json={"max_n": 3, "colorings": "sometimes"})
        assert resp.status_code == 422

    def test_round_trip_model(self, client):
        data = client.post("/verify", json={"max_n": 2}).json()
        assert VerifyResponse.model_validate(data).model_dump() == data

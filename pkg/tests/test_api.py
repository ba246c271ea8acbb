from __future__ import annotations

import pytest
from fastapi.testclient import TestClient
from jsonschema import validate

from acadtree import schemas
from acadtree.api import create_app
from acadtree.repository import build_repository_from_path


@pytest.fixture(scope="module")
def client(pavan_corpus_dir):
    app = create_app(build_repository_from_path(pavan_corpus_dir))
    return TestClient(app)


def test_search_finds_the_founder(client):
    response = client.get("/researchers", params={"name": "PAVAN"})
    assert response.status_code == 200
    body = response.json()
    validate(body, schemas.SEARCH_RESULT_SCHEMA)
    assert body["total_matches"] == 1
    assert body["results"][0]["id"] == "P0001"
    assert body["results"][0]["width"] == 11
    assert body["results"][0]["descendancy"] == 11


def test_search_is_diacritic_and_case_insensitive(client):
    for fragment in ("jose", "JOSÉ", "José"):
        body = client.get("/researchers", params={"name": fragment}).json()
        assert body["total_matches"] == 1, fragment
        assert body["results"][0]["id"] == "R0003"


def test_search_matches_citation_variants(client):
    body = client.get("/researchers", params={"name": "C PAVAN"}).json()
    assert body["total_matches"] == 1
    assert body["results"][0]["id"] == "P0001"


def test_search_short_query_rejected(client):
    response = client.get("/researchers", params={"name": "Q"})
    assert response.status_code == 400
    body = response.json()
    validate(body, schemas.ERROR_ENVELOPE_SCHEMA)
    assert body["error"]["code"] == "QUERY_TOO_SHORT"


def test_search_conjunctive_filters(client):
    ok = client.get(
        "/researchers", params={"name": "PAVAN", "institution": "São Paulo"}
    ).json()
    assert ok["total_matches"] == 1
    none = client.get(
        "/researchers", params={"name": "PAVAN", "institution": "Campinas"}
    ).json()
    assert none["total_matches"] == 0
    area = client.get(
        "/researchers", params={"name": "PAVAN", "area": "Genetics"}
    ).json()
    assert area["total_matches"] == 1


def test_search_ranking_by_descendancy_then_name(client):
    body = client.get("/researchers", params={"name": "AN", "page_size": 100}).json()
    rows = body["results"]
    assert body["total_matches"] == 4
    assert rows[0]["id"] == "P0001"  # highest descendancy first
    keys = [(-row["descendancy"], row["name"]) for row in rows]
    assert keys == sorted(keys)


def test_search_pagination_concatenates_losslessly(client):
    full = client.get("/researchers", params={"name": "AN", "page_size": 100}).json()
    paged = []
    page = 1
    while True:
        body = client.get(
            "/researchers", params={"name": "AN", "page": page, "page_size": 3}
        ).json()
        validate(body, schemas.SEARCH_RESULT_SCHEMA)
        if not body["results"]:
            break
        paged.extend(body["results"])
        page += 1
    assert paged == full["results"]
    assert len(paged) == full["total_matches"]


@pytest.mark.parametrize(
    "params",
    [{"name": "ana", "page": "0"}, {"name": "ana", "page_size": "101"},
     {"name": "ana", "page": "x"}, {"name": "ana", "page_size": "-2"}],
)
def test_bad_pagination(client, params):
    response = client.get("/researchers", params=params)
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "BAD_PAGINATION"


def test_detail_known_id(client):
    response = client.get("/researchers/P0001")
    assert response.status_code == 200
    body = response.json()
    validate(body, schemas.RESEARCHER_DETAIL_SCHEMA)
    assert body["name"] == "Crodowaldo Pavan"
    assert len(body["degrees"]) == 1
    assert body["supervision_counts"] == {"msc": 1, "phd": 10, "total": 11}
    assert body["resume"] is not None


def test_detail_unknown_id(client):
    response = client.get("/researchers/NOPE")
    assert response.status_code == 404
    body = response.json()
    validate(body, schemas.ERROR_ENVELOPE_SCHEMA)
    assert body["error"]["code"] == "UNKNOWN_RESEARCHER"


def test_detail_shows_other_level_degree_without_edge(client):
    body = client.get("/researchers/R0011").json()
    levels = [d["level"] for d in body["degrees"]]
    assert "OTHER" in levels
    # the OTHER degree names a supervisor yet resolved to no extra edge
    assert body["supervision_counts"]["total"] == 0
    tree = client.get("/researchers/P0001/tree").json()
    incoming = [e for e in tree["edges"] if e["supervisee_id"] == "R0011"]
    assert len(incoming) == 1 and incoming[0]["level"] == "MSC"


def test_tree_root_view(client):
    response = client.get("/researchers/P0001/tree")
    assert response.status_code == 200
    body = response.json()
    validate(body, schemas.TREE_VIEW_SCHEMA)
    assert body["root_id"] == "P0001"
    assert len(body["nodes"]) == 12
    assert len(body["edges"]) == 11


def test_tree_expansion_of_leaf_child(client):
    body = client.get(
        "/researchers/P0001/tree", params={"expanded": "R0001"}
    ).json()
    assert len(body["nodes"]) == 12  # R0001 has no children; nothing new


def test_tree_invalid_expansion(client):
    response = client.get(
        "/researchers/R0001/tree", params={"expanded": "R0009"}
    )
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "INVALID_EXPANSION"


def test_metrics_endpoint(client):
    response = client.get("/researchers/P0001/metrics")
    assert response.status_code == 200
    body = response.json()
    validate(body, schemas.METRICS_REPORT_SCHEMA)
    assert body["width"] == 11
    assert body["avg_supervisions_per_year"]["numerator"] == 11
    assert body["avg_supervisions_per_year"]["denominator"] == 38
    assert body["avg_supervisions_per_year"]["display"] == "0.3"


def test_timeline_endpoint(client):
    body = client.get("/researchers/P0001/timeline").json()
    validate(body, schemas.TIMELINE_SCHEMA)
    assert body["1955"] == {"msc": 0, "phd": 1}
    assert body["1982"] == {"msc": 1, "phd": 0}
    assert sum(v["msc"] + v["phd"] for v in body.values()) == 11


def test_timeline_leaf_is_empty_object(client):
    body = client.get("/researchers/R0001/timeline").json()
    assert body == {}


def test_ancestors_endpoint(client):
    body = client.get("/researchers/R0002/ancestors").json()
    validate(body, schemas.ANCESTORS_SCHEMA)
    assert len(body["generations"]) == 1
    assert body["generations"][0][0]["id"] == "P0001"
    root = client.get("/researchers/P0001/ancestors").json()
    assert root["generations"] == []


def test_deepest_path_endpoint(client):
    body = client.get("/researchers/P0001/deepest-path").json()
    validate(body, schemas.DEEPEST_PATH_SCHEMA)
    assert [step["id"] for step in body["path"]][0] == "P0001"
    assert len(body["path"]) == 2  # flat fixture: founder plus one supervisee


def test_identical_requests_are_byte_identical(client):
    first = client.get("/researchers/P0001/metrics").content
    second = client.get("/researchers/P0001/metrics").content
    assert first == second


def test_cors_headers_present(client):
    response = client.get("/researchers/P0001", headers={"Origin": "http://localhost:5173"})
    assert response.headers.get("access-control-allow-origin") == "*"


def test_unmatched_route_uses_error_envelope(client):
    response = client.get("/no-such-route")
    assert response.status_code == 404
    body = response.json()
    validate(body, schemas.ERROR_ENVELOPE_SCHEMA)
    assert body["error"]["code"] == "NOT_FOUND"

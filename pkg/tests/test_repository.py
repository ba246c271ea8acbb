from __future__ import annotations

import json

import pytest

from acadtree.corpus import load_corpus
from acadtree.errors import CorruptRepository, VersionMismatch
from acadtree.repository import (
    build_repository,
    build_repository_from_path,
    load_repository,
    save_repository,
)

from .conftest import cycle_corpus


@pytest.fixture
def pavan_repo(pavan_corpus_dir):
    return build_repository_from_path(pavan_corpus_dir)


def test_round_trip_is_identity(pavan_repo, tmp_path):
    save_repository(pavan_repo, tmp_path / "repo")
    loaded = load_repository(tmp_path / "repo")
    assert loaded.corpus == pavan_repo.corpus
    assert loaded.graph == pavan_repo.graph
    assert loaded.cycle_report == pavan_repo.cycle_report
    assert loaded.link_report == pavan_repo.link_report
    assert loaded.load_report == pavan_repo.load_report


def test_save_load_save_is_byte_identical(pavan_repo, tmp_path):
    save_repository(pavan_repo, tmp_path / "one")
    loaded = load_repository(tmp_path / "one")
    save_repository(loaded, tmp_path / "two")
    for name in ("manifest.json", "records.jsonl", "edges.jsonl", "removed_edges.jsonl"):
        assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()


def test_round_trip_preserves_removed_edges(tmp_path):
    repo = build_repository(cycle_corpus(), _empty_load_report())
    assert len(repo.cycle_report) == 2
    save_repository(repo, tmp_path / "repo")
    loaded = load_repository(tmp_path / "repo")
    assert loaded.cycle_report == repo.cycle_report


def test_missing_edge_file_is_corrupt(pavan_repo, tmp_path):
    save_repository(pavan_repo, tmp_path / "repo")
    (tmp_path / "repo" / "edges.jsonl").unlink()
    with pytest.raises(CorruptRepository):
        load_repository(tmp_path / "repo")


def test_missing_manifest_is_corrupt(tmp_path):
    (tmp_path / "repo").mkdir()
    with pytest.raises(CorruptRepository):
        load_repository(tmp_path / "repo")


def test_unknown_version_rejected(pavan_repo, tmp_path):
    save_repository(pavan_repo, tmp_path / "repo")
    manifest_path = tmp_path / "repo" / "manifest.json"
    manifest = json.loads(manifest_path.read_text())
    manifest["format_version"] = "v99"
    manifest_path.write_text(json.dumps(manifest))
    with pytest.raises(VersionMismatch):
        load_repository(tmp_path / "repo")


def test_garbled_records_are_corrupt(pavan_repo, tmp_path):
    save_repository(pavan_repo, tmp_path / "repo")
    (tmp_path / "repo" / "records.jsonl").write_text('{"id": "X"}\n')
    with pytest.raises(CorruptRepository):
        load_repository(tmp_path / "repo")


def test_count_mismatch_is_corrupt(pavan_repo, tmp_path):
    save_repository(pavan_repo, tmp_path / "repo")
    edges_path = tmp_path / "repo" / "edges.jsonl"
    lines = edges_path.read_text().splitlines()
    edges_path.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(CorruptRepository):
        load_repository(tmp_path / "repo")


def _empty_load_report():
    from acadtree.records import LoadReport

    return LoadReport(files_scanned=0, records_loaded=6, failures=())


def test_loaded_corpus_keeps_filtered_fields(pavan_repo, tmp_path, pavan_corpus_dir):
    corpus, _ = load_corpus(pavan_corpus_dir)
    save_repository(pavan_repo, tmp_path / "repo")
    loaded = load_repository(tmp_path / "repo")
    founder = next(r for r in loaded.corpus if r.id == "P0001")
    assert founder.resume is not None
    assert founder.citation_names == ("PAVAN, C.", "Pavan, Crodowaldo")
    assert loaded.corpus == corpus

"""Versioned on-disk repository: manifest plus three JSON-lines files.

Layout:
    manifest.json        format_version, counts, link/load reports
    records.jsonl        one curriculum record per line
    edges.jsonl          one resolved supervision edge per line
    removed_edges.jsonl  edges dropped by cycle breaking, with their cycles

Writes are deterministic: the same pipeline state always produces
byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import serialize
from .corpus import Corpus, load_corpus
from .errors import AcadtreeError, CorruptRepository, VersionMismatch
from .graph import CycleReport, GenealogyGraph, build_graph
from .linkage import LinkReport, link_corpus
from .parsing import DocumentFormat, parse_curriculum, record_to_row
from .records import LoadReport

FORMAT_VERSION = "1"

_MANIFEST = "manifest.json"
_RECORDS = "records.jsonl"
_EDGES = "edges.jsonl"
_REMOVED = "removed_edges.jsonl"


@dataclass(frozen=True)
class Repository:
    """Everything the service needs, bundled from one pipeline run."""

    corpus: Corpus
    graph: GenealogyGraph
    cycle_report: CycleReport
    link_report: LinkReport
    load_report: LoadReport


def build_repository(corpus: Corpus, load_report: LoadReport) -> Repository:
    """Run linkage and graph construction over an already-loaded corpus."""
    edges, link_report = link_corpus(corpus)
    graph, cycle_report = build_graph(corpus, edges)
    return Repository(
        corpus=corpus,
        graph=graph,
        cycle_report=cycle_report,
        link_report=link_report,
        load_report=load_report,
    )


def build_repository_from_path(corpus_path: str | Path) -> Repository:
    corpus, load_report = load_corpus(corpus_path)
    return build_repository(corpus, load_report)


def save_repository(repo: Repository, path: str | Path) -> None:
    root = Path(path)
    root.mkdir(parents=True, exist_ok=True)

    _write_lines(root / _RECORDS, (record_to_row(r) for r in repo.corpus))
    _write_lines(root / _EDGES, (serialize.edge_to_dict(e) for e in repo.graph.all_edges()))
    _write_lines(
        root / _REMOVED, (serialize.removed_edge_to_dict(r) for r in repo.cycle_report)
    )

    manifest = {
        "format_version": FORMAT_VERSION,
        "counts": {
            "records": len(repo.corpus),
            "edges": sum(len(v) for v in repo.graph.out_edges.values()),
            "removed_edges": len(repo.cycle_report),
        },
        "reports": {
            "link": serialize.link_report_to_dict(repo.link_report),
            "load": serialize.load_report_to_dict(repo.load_report),
        },
    }
    (root / _MANIFEST).write_text(
        json.dumps(manifest, sort_keys=True, indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def load_repository(path: str | Path) -> Repository:
    root = Path(path)
    manifest_path = root / _MANIFEST
    if not manifest_path.is_file():
        raise CorruptRepository(f"missing {_MANIFEST} in {root}")
    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CorruptRepository(f"unreadable manifest: {exc}") from exc

    version = manifest.get("format_version")
    if version != FORMAT_VERSION:
        raise VersionMismatch(
            f"repository format {version!r} not supported (expected {FORMAT_VERSION!r})"
        )

    for name in (_RECORDS, _EDGES, _REMOVED):
        if not (root / name).is_file():
            raise CorruptRepository(f"missing {name} in {root}")

    try:
        corpus = tuple(
            parse_curriculum(line, DocumentFormat.JSONL_ROW)
            for line in _read_lines(root / _RECORDS)
        )
        edges = [serialize.edge_from_dict(json.loads(line)) for line in _read_lines(root / _EDGES)]
        removed = tuple(
            serialize.removed_edge_from_dict(json.loads(line))
            for line in _read_lines(root / _REMOVED)
        )
        reports = manifest["reports"]
        link_report = serialize.link_report_from_dict(reports["link"])
        load_report = serialize.load_report_from_dict(reports["load"])
    except (KeyError, ValueError, TypeError, AcadtreeError) as exc:
        raise CorruptRepository(f"repository contents unreadable: {exc}") from exc

    counts = manifest.get("counts", {})
    if counts.get("records") != len(corpus) or counts.get("edges") != len(edges):
        raise CorruptRepository("manifest counts disagree with repository files")

    try:
        graph, residual_cycles = build_graph(corpus, edges)
    except AcadtreeError as exc:
        raise CorruptRepository(f"stored graph is inconsistent: {exc}") from exc
    if residual_cycles:
        raise CorruptRepository("stored edge set is not acyclic")
    return Repository(
        corpus=corpus,
        graph=graph,
        cycle_report=removed,
        link_report=link_report,
        load_report=load_report,
    )


def _write_lines(path: Path, items) -> None:
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        for item in items:
            fh.write(serialize.dumps(item) + "\n")


def _read_lines(path: Path) -> list[str]:
    return [line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]

"""Corpus loading: a directory of curriculum documents becomes a sorted record list.

Per-file parse failures are collected into the load report instead of
aborting; only structural problems (duplicate ids, an empty corpus)
raise.  The result is sorted by id so it does not depend on filesystem
enumeration order.
"""

from __future__ import annotations

from pathlib import Path

from .errors import AcadtreeError, DuplicateId, EmptyCorpus, MalformedDocument
from .parsing import DocumentFormat, parse_curriculum
from .records import LoadFailure, LoadReport, ResearcherRecord

Corpus = tuple[ResearcherRecord, ...]


def load_corpus(path: str | Path) -> tuple[Corpus, LoadReport]:
    """Load every .xml and .jsonl document under `path` (one level deep)."""
    root = Path(path)
    if not root.exists():
        raise EmptyCorpus(f"corpus path does not exist: {root}")
    if root.is_file():
        files = [root]
    else:
        files = sorted(p for p in root.iterdir() if p.suffix in (".xml", ".jsonl"))

    by_id: dict[str, tuple[str, ResearcherRecord]] = {}
    failures: list[LoadFailure] = []
    for file in files:
        for source, document, fmt in _documents_in(file):
            try:
                record = parse_curriculum(document, fmt)
            except AcadtreeError as exc:
                failures.append(LoadFailure(source, exc.code, str(exc)))
                continue
            if record.id in by_id:
                first_source = by_id[record.id][0]
                raise DuplicateId(
                    f"id {record.id!r} appears in both {first_source} and {source}"
                )
            by_id[record.id] = (source, record)

    records = tuple(record for _, record in sorted(by_id.values(), key=lambda kv: kv[1].id))
    if not records:
        raise EmptyCorpus(f"no curriculum records loaded from {root}")
    report = LoadReport(
        files_scanned=len(files),
        records_loaded=len(records),
        failures=tuple(failures),
    )
    return records, report


def _documents_in(file: Path):
    if file.suffix == ".xml":
        try:
            yield str(file), file.read_bytes(), DocumentFormat.XML
        except OSError as exc:
            raise MalformedDocument(f"cannot read {file}: {exc}") from exc
        return
    for lineno, line in enumerate(file.read_text(encoding="utf-8").splitlines(), start=1):
        if line.strip():
            yield f"{file}:{lineno}", line, DocumentFormat.JSONL_ROW

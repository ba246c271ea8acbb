"""Read-only HTTP interface over a loaded repository.

Pure query helpers live here so the CLI `search` command and the HTTP
layer share one implementation; `create_app` wraps them in FastAPI with
a uniform JSON error envelope and permissive CORS for the web explorer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AcadtreeError,
    BadPagination,
    EmptyName,
    QueryTooShort,
    UnknownResearcher,
)
from .export import tree_view_to_dict
from .graph import ancestors, deepest_path, subtree_view
from .metrics import (
    descendancy,
    metrics_report,
    report_to_dict,
    supervisions_by_year,
    width,
)
from .names import normalize_name
from .records import Level, ResearcherRecord
from .repository import Repository

MAX_PAGE_SIZE = 100
MIN_QUERY_LENGTH = 2


@dataclass(frozen=True)
class SearchRow:
    id: str
    name: str
    institution: str | None
    width: int
    descendancy: int
    name_keys: tuple[str, ...]
    institution_key: str
    area_keys: tuple[str, ...]


class QueryIndex:
    """Precomputed search rows ranked by descendancy."""

    def __init__(self, repo: Repository):
        rows = []
        for record in repo.corpus:
            rows.append(
                SearchRow(
                    id=record.id,
                    name=record.full_name,
                    institution=record.institution,
                    width=width(repo.graph, record.id),
                    descendancy=descendancy(repo.graph, record.id),
                    name_keys=_match_keys((record.full_name, *record.citation_names)),
                    institution_key=_match_key(record.institution or ""),
                    area_keys=_match_keys(record.areas),
                )
            )
        rows.sort(key=lambda row: (-row.descendancy, row.name, row.id))
        self.rows = tuple(rows)


def _match_key(text: str) -> str:
    try:
        return str(normalize_name(text))
    except EmptyName:
        return ""


def _match_keys(texts) -> tuple[str, ...]:
    return tuple(key for key in (_match_key(t) for t in texts) if key)


def search_researchers(
    index: QueryIndex,
    name_fragment: str,
    institution: str | None = None,
    area: str | None = None,
    page: int = 1,
    page_size: int = 20,
) -> dict:
    """Diacritic- and case-insensitive substring search with conjunctive filters."""
    if len(name_fragment.strip()) < MIN_QUERY_LENGTH:
        raise QueryTooShort(
            f"name fragment must have at least {MIN_QUERY_LENGTH} characters"
        )
    needle = _match_key(name_fragment)
    if not needle:
        raise QueryTooShort("name fragment has no matchable characters")
    if page < 1:
        raise BadPagination("page must be a positive integer")
    if not 1 <= page_size <= MAX_PAGE_SIZE:
        raise BadPagination(f"page_size must be in [1, {MAX_PAGE_SIZE}]")

    institution_needle = _match_key(institution) if institution else ""
    area_needle = _match_key(area) if area else ""

    matches = [
        row
        for row in index.rows
        if any(needle in key for key in row.name_keys)
        and (not institution_needle or institution_needle in row.institution_key)
        and (not area_needle or any(area_needle in key for key in row.area_keys))
    ]
    start = (page - 1) * page_size
    return {
        "total_matches": len(matches),
        "page": page,
        "page_size": page_size,
        "results": [
            {
                "id": row.id,
                "name": row.name,
                "institution": row.institution,
                "width": row.width,
                "descendancy": row.descendancy,
            }
            for row in matches[start : start + page_size]
        ],
    }


def researcher_detail(repo: Repository, researcher_id: str) -> dict:
    record = _find_record(repo, researcher_id)
    out = repo.graph.out(researcher_id)
    msc = sum(1 for e in out if e.level is Level.MSC)
    phd = sum(1 for e in out if e.level is Level.PHD)
    return {
        "id": record.id,
        "name": record.full_name,
        "citation_names": list(record.citation_names),
        "institution": record.institution,
        "areas": list(record.areas),
        "degrees": [
            {
                "level": d.level.value,
                "year": d.year,
                "thesis": d.thesis_title,
                "supervisor": d.supervisor_name or None,
                "institution": d.institution,
                "areas": list(d.areas),
            }
            for d in record.degrees
        ],
        "supervisions_declared": [
            {"level": s.level.value, "year": s.year, "supervisee": s.supervisee_name}
            for s in record.supervisions_given
        ],
        "supervision_counts": {"msc": msc, "phd": phd, "total": len(out)},
        "resume": record.resume,
    }


def _find_record(repo: Repository, researcher_id: str) -> ResearcherRecord:
    for record in repo.corpus:
        if record.id == researcher_id:
            return record
    raise UnknownResearcher(f"no researcher with id {researcher_id!r}")


def timeline_payload(repo: Repository, researcher_id: str) -> dict:
    return {
        str(year): {"msc": msc, "phd": phd}
        for year, (msc, phd) in supervisions_by_year(repo.graph, researcher_id).items()
    }


def ancestors_payload(repo: Repository, researcher_id: str) -> dict:
    return {
        "researcher_id": researcher_id,
        "generations": [
            [{"id": gid, "name": repo.graph.nodes[gid].name} for gid in generation]
            for generation in ancestors(repo.graph, researcher_id)
        ],
    }


def deepest_path_payload(repo: Repository, researcher_id: str) -> dict:
    return {
        "researcher_id": researcher_id,
        "path": [
            {"id": pid, "name": repo.graph.nodes[pid].name}
            for pid in deepest_path(repo.graph, researcher_id)
        ],
    }


def _parse_positive_int(raw: str, name: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise BadPagination(f"{name} must be an integer") from None
    if value < 1:
        raise BadPagination(f"{name} must be positive")
    return value


_STATUS_BY_CODE = {
    "QUERY_TOO_SHORT": 400,
    "BAD_PAGINATION": 400,
    "INVALID_EXPANSION": 400,
    "UNKNOWN_RESEARCHER": 404,
}


def create_app(repo: Repository):
    """Build the FastAPI application bound to one repository snapshot."""
    from fastapi import FastAPI
    from fastapi.middleware.cors import CORSMiddleware
    from fastapi.responses import JSONResponse
    from starlette.exceptions import HTTPException as StarletteHTTPException

    app = FastAPI(title="acadtree API", version="1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )
    index = QueryIndex(repo)

    @app.exception_handler(AcadtreeError)
    async def domain_error(request, exc: AcadtreeError):
        status = _STATUS_BY_CODE.get(exc.code, 400)
        return JSONResponse(
            status_code=status,
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request, exc: StarletteHTTPException):
        code = "NOT_FOUND" if exc.status_code == 404 else f"HTTP_{exc.status_code}"
        return JSONResponse(
            status_code=exc.status_code,
            content={"error": {"code": code, "message": str(exc.detail)}},
        )

    @app.get("/researchers")
    def search(
        name: str = "",
        institution: str | None = None,
        area: str | None = None,
        page: str = "1",
        page_size: str = "20",
    ):
        return search_researchers(
            index,
            name,
            institution=institution,
            area=area,
            page=_parse_positive_int(page, "page"),
            page_size=_parse_positive_int(page_size, "page_size"),
        )

    @app.get("/researchers/{researcher_id}")
    def detail(researcher_id: str):
        return researcher_detail(repo, researcher_id)

    @app.get("/researchers/{researcher_id}/tree")
    def tree(researcher_id: str, expanded: str = ""):
        expanded_ids = {part.strip() for part in expanded.split(",") if part.strip()}
        view = subtree_view(repo.graph, researcher_id, expanded_ids)
        return tree_view_to_dict(view)

    @app.get("/researchers/{researcher_id}/metrics")
    def metrics(researcher_id: str):
        return report_to_dict(metrics_report(repo.graph, researcher_id))

    @app.get("/researchers/{researcher_id}/timeline")
    def timeline(researcher_id: str):
        return timeline_payload(repo, researcher_id)

    @app.get("/researchers/{researcher_id}/ancestors")
    def ancestor_generations(researcher_id: str):
        return ancestors_payload(repo, researcher_id)

    @app.get("/researchers/{researcher_id}/deepest-path")
    def deepest(researcher_id: str):
        return deepest_path_payload(repo, researcher_id)

    return app


__all__ = [
    "QueryIndex",
    "create_app",
    "researcher_detail",
    "search_researchers",
    "timeline_payload",
    "ancestors_payload",
    "deepest_path_payload",
]

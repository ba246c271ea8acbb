"""JSON codecs for edges, claims, reports, and removed edges.

These are the stable wire formats used by the repository files, the CLI
exports, and the HTTP API; every encoder sorts its collections so equal
inputs serialize to equal bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .graph import RemovedEdge
from .linkage import (
    AmbiguousClaim,
    Direction,
    LinkReport,
    SupervisionClaim,
    SupervisionEdge,
    YearConflict,
)
from .names import NormalizedName
from .records import Level, LoadFailure, LoadReport


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def edge_to_dict(edge: SupervisionEdge) -> dict:
    return {
        "supervisor_id": edge.supervisor_id,
        "supervisee_id": edge.supervisee_id,
        "level": edge.level.value,
        "year": edge.year,
        "provenance": sorted(d.value for d in edge.provenance),
    }


def edge_from_dict(data: dict) -> SupervisionEdge:
    return SupervisionEdge(
        supervisor_id=data["supervisor_id"],
        supervisee_id=data["supervisee_id"],
        level=Level(data["level"]),
        year=data["year"],
        provenance=frozenset(Direction(d) for d in data["provenance"]),
    )


def claim_to_dict(claim: SupervisionClaim) -> dict:
    return {
        "declaring_record_id": claim.declaring_record_id,
        "counterpart_name": str(claim.counterpart_name),
        "direction": claim.direction.value,
        "level": claim.level.value,
        "year": claim.year,
    }


def claim_from_dict(data: dict) -> SupervisionClaim:
    return SupervisionClaim(
        declaring_record_id=data["declaring_record_id"],
        counterpart_name=NormalizedName(data["counterpart_name"]),
        direction=Direction(data["direction"]),
        level=Level(data["level"]),
        year=data["year"],
    )


def link_report_to_dict(report: LinkReport) -> dict:
    return {
        "total_claims": report.total_claims,
        "resolved_count": report.resolved_count,
        "ambiguous_claims": [
            {"claim": claim_to_dict(a.claim), "candidate_ids": list(a.candidate_ids)}
            for a in report.ambiguous_claims
        ],
        "unmatched_claims": [claim_to_dict(c) for c in report.unmatched_claims],
        "year_conflicts": [
            {
                "supervisor_id": c.supervisor_id,
                "supervisee_id": c.supervisee_id,
                "level": c.level.value,
                "years": list(c.years),
                "chosen_year": c.chosen_year,
            }
            for c in report.year_conflicts
        ],
    }


def link_report_from_dict(data: dict) -> LinkReport:
    return LinkReport(
        total_claims=data["total_claims"],
        resolved_count=data["resolved_count"],
        ambiguous_claims=tuple(
            AmbiguousClaim(
                claim=claim_from_dict(a["claim"]),
                candidate_ids=tuple(a["candidate_ids"]),
            )
            for a in data["ambiguous_claims"]
        ),
        unmatched_claims=tuple(claim_from_dict(c) for c in data["unmatched_claims"]),
        year_conflicts=tuple(
            YearConflict(
                supervisor_id=c["supervisor_id"],
                supervisee_id=c["supervisee_id"],
                level=Level(c["level"]),
                years=tuple(c["years"]),
                chosen_year=c["chosen_year"],
            )
            for c in data["year_conflicts"]
        ),
    )


def removed_edge_to_dict(removed: RemovedEdge) -> dict:
    data = edge_to_dict(removed.edge)
    data["cycle"] = list(removed.cycle)
    return data


def removed_edge_from_dict(data: dict) -> RemovedEdge:
    payload = {k: v for k, v in data.items() if k != "cycle"}
    return RemovedEdge(edge=edge_from_dict(payload), cycle=tuple(data["cycle"]))


def load_report_to_dict(report: LoadReport) -> dict:
    return {
        "files_scanned": report.files_scanned,
        "records_loaded": report.records_loaded,
        "failures": [
            {"source": f.source, "error_code": f.error_code, "message": f.message}
            for f in report.failures
        ],
    }


def load_report_from_dict(data: dict) -> LoadReport:
    return LoadReport(
        files_scanned=data["files_scanned"],
        records_loaded=data["records_loaded"],
        failures=tuple(
            LoadFailure(f["source"], f["error_code"], f["message"])
            for f in data["failures"]
        ),
    )

"""Supervision linkage: from declared claims to resolved, deduplicated edges.

Both curriculum sides emit claims: a degree entry names the supervisor
(supervisee-declared), a supervision entry names the supervisee
(supervisor-declared).  A claim resolves only when its counterpart name
maps to exactly one researcher; anything else lands in the report, never
in the graph.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from enum import Enum

from .corpus import Corpus
from .names import NormalizedName, normalize_name
from .records import Level, ResearcherRecord


class Direction(str, Enum):
    SUPERVISOR_DECLARED = "SUPERVISOR_DECLARED"
    SUPERVISEE_DECLARED = "SUPERVISEE_DECLARED"


@dataclass(frozen=True)
class SupervisionClaim:
    """One unresolved supervision assertion with its provenance."""

    declaring_record_id: str
    counterpart_name: NormalizedName
    direction: Direction
    level: Level
    year: int


@dataclass(frozen=True)
class SupervisionEdge:
    """One resolved supervisor -> supervisee relation."""

    supervisor_id: str
    supervisee_id: str
    level: Level
    year: int
    provenance: frozenset[Direction]

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.supervisor_id, self.supervisee_id, self.level.value)


def edge_sort_key(edge: SupervisionEdge) -> tuple[str, str, str, int]:
    return (edge.supervisor_id, edge.supervisee_id, edge.level.value, edge.year)


@dataclass(frozen=True)
class AmbiguousClaim:
    claim: SupervisionClaim
    candidate_ids: tuple[str, ...]


@dataclass(frozen=True)
class YearConflict:
    supervisor_id: str
    supervisee_id: str
    level: Level
    years: tuple[int, ...]
    chosen_year: int


@dataclass(frozen=True)
class LinkReport:
    """Where every claim went: resolved + ambiguous + unmatched = total."""

    total_claims: int
    resolved_count: int
    ambiguous_claims: tuple[AmbiguousClaim, ...] = ()
    unmatched_claims: tuple[SupervisionClaim, ...] = ()
    year_conflicts: tuple[YearConflict, ...] = field(default=())


NameIndex = dict[NormalizedName, tuple[str, ...]]


def build_name_index(corpus: Corpus) -> NameIndex:
    """Map every normalized full name and citation variant to candidate ids."""
    candidates: dict[NormalizedName, set[str]] = defaultdict(set)
    for record in corpus:
        candidates[normalize_name(record.full_name)].add(record.id)
        for variant in record.citation_names:
            candidates[normalize_name(variant)].add(record.id)
    return {name: tuple(sorted(ids)) for name, ids in candidates.items()}


def extract_claims(record: ResearcherRecord) -> list[SupervisionClaim]:
    """Emit claims from both curriculum sides of one record."""
    claims: list[SupervisionClaim] = []
    for degree in record.degrees:
        if degree.level is Level.OTHER or not degree.supervisor_name:
            continue
        claims.append(
            SupervisionClaim(
                declaring_record_id=record.id,
                counterpart_name=normalize_name(degree.supervisor_name),
                direction=Direction.SUPERVISEE_DECLARED,
                level=degree.level,
                year=degree.year,
            )
        )
    for supervision in record.supervisions_given:
        claims.append(
            SupervisionClaim(
                declaring_record_id=record.id,
                counterpart_name=normalize_name(supervision.supervisee_name),
                direction=Direction.SUPERVISOR_DECLARED,
                level=supervision.level,
                year=supervision.year,
            )
        )
    return claims


def _claim_sort_key(claim: SupervisionClaim):
    return (
        claim.declaring_record_id,
        claim.direction.value,
        claim.counterpart_name,
        claim.level.value,
        claim.year,
    )


def resolve_claims(
    claims: list[SupervisionClaim], index: NameIndex, corpus: Corpus
) -> tuple[list[SupervisionEdge], LinkReport]:
    """Resolve claims whose counterpart name has exactly one candidate.

    Ambiguous names (>= 2 candidates) and unknown names go to the report;
    so do claims that would resolve to a self-edge.  Output ordering is
    deterministic regardless of claim order.
    """
    known_ids = {record.id for record in corpus}
    edges: list[SupervisionEdge] = []
    ambiguous: list[AmbiguousClaim] = []
    unmatched: list[SupervisionClaim] = []
    for claim in sorted(claims, key=_claim_sort_key):
        candidates = index.get(claim.counterpart_name, ())
        if any(cid not in known_ids for cid in candidates):
            raise ValueError("name index does not match the given corpus")
        if len(candidates) == 0:
            unmatched.append(claim)
            continue
        if len(candidates) > 1:
            ambiguous.append(AmbiguousClaim(claim, candidates))
            continue
        counterpart_id = candidates[0]
        if counterpart_id == claim.declaring_record_id:
            unmatched.append(claim)
            continue
        if claim.direction is Direction.SUPERVISEE_DECLARED:
            supervisor_id, supervisee_id = counterpart_id, claim.declaring_record_id
        else:
            supervisor_id, supervisee_id = claim.declaring_record_id, counterpart_id
        edges.append(
            SupervisionEdge(
                supervisor_id=supervisor_id,
                supervisee_id=supervisee_id,
                level=claim.level,
                year=claim.year,
                provenance=frozenset((claim.direction,)),
            )
        )
    edges.sort(key=edge_sort_key)
    report = LinkReport(
        total_claims=len(claims),
        resolved_count=len(edges),
        ambiguous_claims=tuple(ambiguous),
        unmatched_claims=tuple(unmatched),
    )
    return edges, report


def merge_edges(
    edges: list[SupervisionEdge],
) -> tuple[list[SupervisionEdge], tuple[YearConflict, ...]]:
    """Merge edges sharing (supervisor, supervisee, level); union provenance.

    On year disagreement the supervisee-declared year wins (the degree
    record carries the defense date); the earliest wins among several
    same-direction years.  Idempotent and order-insensitive.
    """
    groups: dict[tuple[str, str, str], list[SupervisionEdge]] = defaultdict(list)
    for edge in edges:
        groups[edge.key].append(edge)

    merged: list[SupervisionEdge] = []
    conflicts: list[YearConflict] = []
    for key in sorted(groups):
        group = groups[key]
        provenance = frozenset().union(*(e.provenance for e in group))
        years = sorted({e.year for e in group})
        preferred = sorted(
            {e.year for e in group if Direction.SUPERVISEE_DECLARED in e.provenance}
        )
        chosen = (preferred or years)[0]
        if len(years) > 1:
            supervisor_id, supervisee_id, level = key
            conflicts.append(
                YearConflict(
                    supervisor_id=supervisor_id,
                    supervisee_id=supervisee_id,
                    level=Level(level),
                    years=tuple(years),
                    chosen_year=chosen,
                )
            )
        merged.append(replace(group[0], year=chosen, provenance=provenance))
    merged.sort(key=edge_sort_key)
    return merged, tuple(conflicts)


def link_corpus(corpus: Corpus) -> tuple[list[SupervisionEdge], LinkReport]:
    """Full linkage pass: extract, resolve, merge; report includes conflicts."""
    index = build_name_index(corpus)
    claims = [claim for record in corpus for claim in extract_claims(record)]
    resolved, report = resolve_claims(claims, index, corpus)
    merged, conflicts = merge_edges(resolved)
    return merged, replace(report, year_conflicts=conflicts)

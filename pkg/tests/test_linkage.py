from __future__ import annotations

import random

from hypothesis import given
from hypothesis import strategies as st

from acadtree.corpus import load_corpus
from acadtree.linkage import (
    Direction,
    SupervisionEdge,
    build_name_index,
    extract_claims,
    link_corpus,
    merge_edges,
    resolve_claims,
)
from acadtree.records import DegreeEntry, Level, SupervisionEntry

from .conftest import record


def test_index_contains_full_names_and_variants():
    corpus = (
        record("R1", "Ana Reis"),
        record("R2", "Crodowaldo Pavan", citation_names=("PAVAN, C.",)),
    )
    index = build_name_index(corpus)
    assert index["ANA REIS"] == ("R1",)
    assert index["CRODOWALDO PAVAN"] == ("R2",)
    assert index["C PAVAN"] == ("R2",)


def test_index_represents_collisions():
    corpus = (record("R1", "José da Silva"), record("R2", "Jose  da Silva"))
    index = build_name_index(corpus)
    assert index["JOSE DA SILVA"] == ("R1", "R2")


def test_extract_claims_both_directions():
    rec = record(
        "R1",
        degrees=(DegreeEntry(level=Level.PHD, year=1990, supervisor_name="Ana Reis"),),
        supervisions_given=(
            SupervisionEntry(level=Level.PHD, year=2000, supervisee_name="Bia Seixas"),
        ),
    )
    claims = extract_claims(rec)
    assert len(claims) == 2
    directions = {c.direction for c in claims}
    assert directions == {Direction.SUPERVISEE_DECLARED, Direction.SUPERVISOR_DECLARED}
    by_direction = {c.direction: c for c in claims}
    assert by_direction[Direction.SUPERVISEE_DECLARED].counterpart_name == "ANA REIS"
    assert by_direction[Direction.SUPERVISOR_DECLARED].counterpart_name == "BIA SEIXAS"


def test_other_level_degree_emits_no_claim():
    rec = record(
        "R1",
        degrees=(DegreeEntry(level=Level.OTHER, year=1990, supervisor_name="Ana Reis"),),
    )
    assert extract_claims(rec) == []


def test_empty_supervisor_emits_no_claim():
    rec = record("R1", degrees=(DegreeEntry(level=Level.PHD, year=1990),))
    assert extract_claims(rec) == []


def test_pavan_pattern_resolves_to_eleven_edges(pavan_corpus_dir):
    corpus, _ = load_corpus(pavan_corpus_dir)
    edges, report = link_corpus(corpus)
    assert len(edges) == 11
    assert all(e.supervisor_id == "P0001" for e in edges)
    assert report.total_claims == 11
    assert report.resolved_count == 11
    assert report.ambiguous_claims == ()
    assert report.unmatched_claims == ()
    assert report.year_conflicts == ()


def test_ambiguous_name_goes_to_report():
    corpus = (
        record("R1", "José da Silva"),
        record("R2", "Jose da Silva"),
        record("R3", "Ana Reis", supervisions_given=(
            SupervisionEntry(level=Level.PHD, year=1990, supervisee_name="José da Silva"),
        )),
    )
    index = build_name_index(corpus)
    claims = [c for r in corpus for c in extract_claims(r)]
    edges, report = resolve_claims(claims, index, corpus)
    assert edges == []
    assert len(report.ambiguous_claims) == 1
    assert report.ambiguous_claims[0].candidate_ids == ("R1", "R2")


def test_unknown_name_goes_to_unmatched():
    corpus = (
        record("R1", "Ana Reis", supervisions_given=(
            SupervisionEntry(level=Level.PHD, year=1990, supervisee_name="Nadia Bueno"),
        )),
    )
    edges, report = resolve_claims(
        [c for r in corpus for c in extract_claims(r)], build_name_index(corpus), corpus
    )
    assert edges == []
    assert len(report.unmatched_claims) == 1


def test_self_edge_classified_unmatched():
    corpus = (
        record("R1", "Ana Reis", supervisions_given=(
            SupervisionEntry(level=Level.PHD, year=1990, supervisee_name="Ana Reis"),
        )),
    )
    edges, report = resolve_claims(
        [c for r in corpus for c in extract_claims(r)], build_name_index(corpus), corpus
    )
    assert edges == []
    assert len(report.unmatched_claims) == 1


def _dual(year_supervisor: int, year_supervisee: int) -> list[SupervisionEdge]:
    return [
        SupervisionEdge("R1", "R2", Level.PHD, year_supervisor,
                        frozenset({Direction.SUPERVISOR_DECLARED})),
        SupervisionEdge("R1", "R2", Level.PHD, year_supervisee,
                        frozenset({Direction.SUPERVISEE_DECLARED})),
    ]


def test_merge_same_year():
    merged, conflicts = merge_edges(_dual(1995, 1995))
    assert len(merged) == 1
    assert conflicts == ()
    assert merged[0].provenance == frozenset(
        {Direction.SUPERVISOR_DECLARED, Direction.SUPERVISEE_DECLARED}
    )


def test_merge_year_conflict_prefers_supervisee_side():
    merged, conflicts = merge_edges(_dual(1995, 1996))
    assert len(merged) == 1
    assert merged[0].year == 1996
    assert len(conflicts) == 1
    assert conflicts[0].years == (1995, 1996)
    assert conflicts[0].chosen_year == 1996


def test_merge_keeps_msc_and_phd_distinct():
    edges = [
        SupervisionEdge("R1", "R2", Level.MSC, 1990, frozenset({Direction.SUPERVISOR_DECLARED})),
        SupervisionEdge("R1", "R2", Level.PHD, 1994, frozenset({Direction.SUPERVISOR_DECLARED})),
    ]
    merged, conflicts = merge_edges(edges)
    assert len(merged) == 2
    assert conflicts == ()


def test_merge_idempotent():
    merged, _ = merge_edges(_dual(1995, 1996))
    again, conflicts = merge_edges(merged)
    assert again == merged
    assert conflicts == ()


@given(st.permutations(range(4)))
def test_merge_order_insensitive(order):
    edges = _dual(1995, 1996) + [
        SupervisionEdge("R3", "R4", Level.MSC, 1980, frozenset({Direction.SUPERVISOR_DECLARED})),
        SupervisionEdge("R3", "R4", Level.MSC, 1981, frozenset({Direction.SUPERVISOR_DECLARED})),
    ]
    baseline, base_conflicts = merge_edges(edges)
    shuffled = [edges[i] for i in order]
    merged, conflicts = merge_edges(shuffled)
    assert merged == baseline
    assert conflicts == base_conflicts


def test_same_direction_year_conflict_takes_earliest():
    edges = [
        SupervisionEdge("R3", "R4", Level.MSC, 1981, frozenset({Direction.SUPERVISOR_DECLARED})),
        SupervisionEdge("R3", "R4", Level.MSC, 1980, frozenset({Direction.SUPERVISOR_DECLARED})),
    ]
    merged, conflicts = merge_edges(edges)
    assert merged[0].year == 1980
    assert conflicts[0].years == (1980, 1981)


def test_linkage_is_deterministic_under_record_permutation(pavan_corpus_dir):
    corpus, _ = load_corpus(pavan_corpus_dir)
    baseline_edges, baseline_report = link_corpus(corpus)
    shuffled = list(corpus)
    random.Random(7).shuffle(shuffled)
    edges, report = link_corpus(tuple(shuffled))
    assert edges == baseline_edges
    assert report == baseline_report


def test_conservation_on_pavan_corpus(pavan_corpus_dir):
    corpus, _ = load_corpus(pavan_corpus_dir)
    _, report = link_corpus(corpus)
    assert (
        report.resolved_count
        + len(report.ambiguous_claims)
        + len(report.unmatched_claims)
        == report.total_claims
    )

from __future__ import annotations

import random
from pathlib import Path

import pytest

from acadtree.graph import GenealogyGraph, build_graph
from acadtree.linkage import Direction, SupervisionEdge
from acadtree.records import Level, ResearcherRecord, SupervisionEntry

DATA_DIR = Path(__file__).parent / "data"


def record(record_id: str, name: str | None = None, **kwargs) -> ResearcherRecord:
    return ResearcherRecord(id=record_id, full_name=name or f"Researcher {record_id}", **kwargs)


def edge(
    supervisor: str,
    supervisee: str,
    level: Level = Level.PHD,
    year: int = 1990,
    provenance: frozenset[Direction] = frozenset({Direction.SUPERVISOR_DECLARED}),
) -> SupervisionEdge:
    return SupervisionEdge(supervisor, supervisee, level, year, provenance)


def graph_from(edge_list: list[SupervisionEdge], extra_ids: tuple[str, ...] = ()) -> GenealogyGraph:
    ids = {e.supervisor_id for e in edge_list} | {e.supervisee_id for e in edge_list}
    ids.update(extra_ids)
    corpus = tuple(record(i) for i in sorted(ids))
    graph, removed = build_graph(corpus, edge_list)
    assert not removed, "fixture edges must be acyclic"
    return graph


G1_EDGES = [
    edge("A", "B", Level.PHD, 1990),
    edge("A", "C", Level.MSC, 1992),
    edge("B", "D", Level.PHD, 1995),
    edge("B", "E", Level.MSC, 1996),
    edge("D", "F", Level.PHD, 2001),
]

G2_EDGES = [
    edge("A", "B", Level.PHD, 1980),
    edge("A", "C", Level.PHD, 1981),
    edge("B", "D", Level.PHD, 1990),
    edge("C", "E", Level.PHD, 1991),
]


@pytest.fixture
def g1() -> GenealogyGraph:
    return graph_from(G1_EDGES)


@pytest.fixture
def g2() -> GenealogyGraph:
    return graph_from(G2_EDGES)


@pytest.fixture(scope="session")
def pavan_corpus_dir() -> Path:
    return DATA_DIR / "pavan"


def random_dag(seed: int) -> tuple[list[str], list[tuple[str, str, str, int]]]:
    """Seeded random DAG as (node ids, edge tuples); at most 40 nodes.

    Edges follow a random topological order, so the result is acyclic by
    construction.  Kept sparse at larger sizes so exhaustive path
    enumeration in the oracles stays cheap.
    """
    rng = random.Random(seed)
    if rng.random() < 0.25:
        n = rng.randint(1, 8)
        density = 0.5
    else:
        n = rng.randint(2, 40)
        density = min(1.0, 1.6 / max(1, n * 0.35))
    ids = [f"N{i:02d}" for i in range(n)]
    order = ids[:]
    rng.shuffle(order)

    edges: list[tuple[str, str, str, int]] = []
    seen: set[tuple[str, str, str]] = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() >= density:
                continue
            level = rng.choice(["MSC", "PHD"])
            key = (order[i], order[j], level)
            if key in seen:
                continue
            seen.add(key)
            edges.append((order[i], order[j], level, rng.randint(1950, 2020)))
            if len(edges) >= 60:
                return ids, edges
    return ids, edges


def dag_to_graph(ids: list[str], edge_tuples: list[tuple[str, str, str, int]]) -> GenealogyGraph:
    corpus = tuple(record(i) for i in ids)
    edge_list = [
        edge(sup, sub, Level(level), year) for sup, sub, level, year in edge_tuples
    ]
    graph, removed = build_graph(corpus, edge_list)
    assert not removed
    return graph


def cycle_corpus() -> tuple[ResearcherRecord, ...]:
    """Six records whose declared supervisions form a 2-cycle and a 3-cycle."""

    def declares(rid: str, name: str, entries: list[tuple[str, int]]) -> ResearcherRecord:
        return record(
            rid,
            name,
            supervisions_given=tuple(
                SupervisionEntry(level=Level.PHD, year=year, supervisee_name=target)
                for target, year in entries
            ),
        )

    return (
        declares("CX", "Xavier Duarte", [("Yara Campos", 1990)]),
        declares("CY", "Yara Campos", [("Xavier Duarte", 1995)]),
        declares("CP", "Pedro Antunes", [("Quiteria Ramos", 2000)]),
        declares("CQ", "Quiteria Ramos", [("Renato Farias", 2001)]),
        declares("CR", "Renato Farias", [("Pedro Antunes", 2002)]),
        record("CZ", "Zelia Furtado"),
    )

"""The immutable genealogy graph: construction, cycle breaking, traversal.

Descendancy and depth only make sense on an acyclic graph, so build time
breaks every directed cycle deterministically: within each detected
cycle the edge with the latest year goes (ties to the largest
(supervisor, supervisee, level) key), repeated until no cycle remains.
"""

from __future__ import annotations

import graphlib
from collections import deque
from dataclasses import dataclass

from .corpus import Corpus
from .errors import InvalidExpansion, UnknownEndpoint, UnknownResearcher
from .linkage import SupervisionEdge, edge_sort_key
from .records import DegreeEntry, ResearcherRecord


@dataclass(frozen=True)
class NodeMeta:
    """Rendering metadata for one researcher, taken verbatim from the record."""

    name: str
    institution: str | None
    areas: tuple[str, ...]
    degrees: tuple[DegreeEntry, ...]


@dataclass(frozen=True)
class RemovedEdge:
    edge: SupervisionEdge
    cycle: tuple[str, ...]


CycleReport = tuple[RemovedEdge, ...]


@dataclass(frozen=True)
class GenealogyGraph:
    nodes: dict[str, NodeMeta]
    out_edges: dict[str, tuple[SupervisionEdge, ...]]
    in_edges: dict[str, tuple[SupervisionEdge, ...]]

    def require(self, researcher_id: str) -> None:
        if researcher_id not in self.nodes:
            raise UnknownResearcher(f"no researcher with id {researcher_id!r}")

    def out(self, researcher_id: str) -> tuple[SupervisionEdge, ...]:
        return self.out_edges.get(researcher_id, ())

    def in_(self, researcher_id: str) -> tuple[SupervisionEdge, ...]:
        return self.in_edges.get(researcher_id, ())

    def child_ids(self, researcher_id: str) -> list[str]:
        """Distinct direct supervisees, ordered by first supervision year then id."""
        first_year: dict[str, int] = {}
        for edge in self.out(researcher_id):
            current = first_year.get(edge.supervisee_id)
            if current is None or edge.year < current:
                first_year[edge.supervisee_id] = edge.year
        return sorted(first_year, key=lambda child: (first_year[child], child))

    def parent_ids(self, researcher_id: str) -> list[str]:
        return sorted({edge.supervisor_id for edge in self.in_(researcher_id)})

    def all_edges(self) -> list[SupervisionEdge]:
        return [edge for edges in self.out_edges.values() for edge in edges]


def _node_meta(record: ResearcherRecord) -> NodeMeta:
    return NodeMeta(
        name=record.full_name,
        institution=record.institution,
        areas=record.areas,
        degrees=record.degrees,
    )


def build_graph(
    corpus: Corpus, edges: list[SupervisionEdge]
) -> tuple[GenealogyGraph, CycleReport]:
    """Assemble the graph, breaking any directed cycles (see module doc)."""
    ids = {record.id for record in corpus}
    for edge in edges:
        for endpoint in (edge.supervisor_id, edge.supervisee_id):
            if endpoint not in ids:
                raise UnknownEndpoint(f"edge references unknown researcher {endpoint!r}")

    kept = sorted(edges, key=edge_sort_key)
    removed: list[RemovedEdge] = []
    while True:
        cycle = _find_cycle(kept)
        if cycle is None:
            break
        candidates = _cycle_edges(kept, cycle)
        victim = max(candidates, key=lambda e: (e.year, e.key))
        kept.remove(victim)
        removed.append(RemovedEdge(edge=victim, cycle=cycle))

    out_edges: dict[str, list[SupervisionEdge]] = {}
    in_edges: dict[str, list[SupervisionEdge]] = {}
    for edge in kept:
        out_edges.setdefault(edge.supervisor_id, []).append(edge)
        in_edges.setdefault(edge.supervisee_id, []).append(edge)

    graph = GenealogyGraph(
        nodes={record.id: _node_meta(record) for record in sorted(corpus, key=lambda r: r.id)},
        out_edges={k: tuple(v) for k, v in sorted(out_edges.items())},
        in_edges={k: tuple(v) for k, v in sorted(in_edges.items())},
    )
    return graph, tuple(removed)


def _find_cycle(edges: list[SupervisionEdge]) -> tuple[str, ...] | None:
    """Return one directed cycle as a node tuple (smallest id first), or None."""
    successors: dict[str, list[str]] = {}
    for edge in edges:
        successors.setdefault(edge.supervisor_id, [])
        if edge.supervisee_id not in successors[edge.supervisor_id]:
            successors[edge.supervisor_id].append(edge.supervisee_id)

    color: dict[str, int] = {}
    stack: list[str] = []

    def visit(node: str) -> tuple[str, ...] | None:
        color[node] = 1
        stack.append(node)
        for nxt in successors.get(node, ()):
            if color.get(nxt, 0) == 1:
                cycle = tuple(stack[stack.index(nxt):])
                pivot = cycle.index(min(cycle))
                return cycle[pivot:] + cycle[:pivot]
            if color.get(nxt, 0) == 0:
                found = visit(nxt)
                if found is not None:
                    return found
        stack.pop()
        color[node] = 2
        return None

    for start in sorted(successors):
        if color.get(start, 0) == 0:
            found = visit(start)
            if found is not None:
                return found
    return None


def _cycle_edges(
    edges: list[SupervisionEdge], cycle: tuple[str, ...]
) -> list[SupervisionEdge]:
    pairs = {
        (cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    }
    return [e for e in edges if (e.supervisor_id, e.supervisee_id) in pairs]


def is_acyclic(graph: GenealogyGraph) -> bool:
    sorter = graphlib.TopologicalSorter(
        {node: graph.parent_ids(node) for node in graph.nodes}
    )
    try:
        sorter.prepare()
    except graphlib.CycleError:
        return False
    return True


# -- Traversals ----------------------------------------------------------

def descendants(graph: GenealogyGraph, researcher_id: str) -> set[str]:
    """Every researcher reachable through one or more supervision steps."""
    graph.require(researcher_id)
    seen: set[str] = set()
    frontier = deque([researcher_id])
    while frontier:
        current = frontier.popleft()
        for edge in graph.out(current):
            if edge.supervisee_id not in seen:
                seen.add(edge.supervisee_id)
                frontier.append(edge.supervisee_id)
    seen.discard(researcher_id)
    return seen


def ancestors(graph: GenealogyGraph, researcher_id: str) -> list[list[str]]:
    """Supervisor generations: level k = ids k reversed steps away on some path."""
    graph.require(researcher_id)
    generations: list[list[str]] = []
    current = {researcher_id}
    while True:
        previous = {
            edge.supervisor_id for node in current for edge in graph.in_(node)
        }
        if not previous:
            return generations
        generations.append(sorted(previous))
        current = previous


def deepest_path(graph: GenealogyGraph, researcher_id: str) -> list[str]:
    """A longest supervision chain from the researcher.

    Among equal-length chains the lexicographically smallest id sequence
    wins, which makes the answer unique and stable.
    """
    graph.require(researcher_id)
    memo: dict[str, tuple[int, tuple[str, ...]]] = {}

    def best(node: str) -> tuple[int, tuple[str, ...]]:
        cached = memo.get(node)
        if cached is not None:
            return cached
        result = (0, (node,))
        for child in sorted({e.supervisee_id for e in graph.out(node)}):
            depth, path = best(child)
            if depth + 1 > result[0]:
                result = (depth + 1, (node,) + path)
        memo[node] = result
        return result

    return list(best(researcher_id)[1])


@dataclass(frozen=True)
class TreeNode:
    id: str
    name: str
    child_count: int
    expandable: bool


@dataclass(frozen=True)
class TreeEdge:
    supervisor_id: str
    supervisee_id: str
    level: str
    year: int


@dataclass(frozen=True)
class TreeView:
    root_id: str
    nodes: tuple[TreeNode, ...]
    edges: tuple[TreeEdge, ...]


def subtree_view(
    graph: GenealogyGraph,
    researcher_id: str,
    expanded: set[str] | frozenset[str] = frozenset(),
    depth: int = 1,
) -> TreeView:
    """Bounded view: the root, its children to `depth`, plus children of
    every expanded node.  Expanding a node that never becomes visible is
    an error."""
    graph.require(researcher_id)
    if depth < 0:
        raise ValueError("depth must be >= 0")

    rendered: list[str] = [researcher_id]
    rendered_set = {researcher_id}

    def show_children(parent: str) -> list[str]:
        added = []
        for child in graph.child_ids(parent):
            if child not in rendered_set:
                rendered_set.add(child)
                rendered.append(child)
                added.append(child)
        return added

    frontier = [researcher_id]
    for _ in range(depth):
        frontier = [child for node in frontier for child in show_children(node)]

    pending = set(expanded)
    while pending:
        actionable = sorted(node for node in pending if node in rendered_set)
        if not actionable:
            raise InvalidExpansion(
                f"cannot expand nodes not in the current view: {sorted(pending)}"
            )
        for node in actionable:
            show_children(node)
            pending.discard(node)

    nodes = tuple(
        TreeNode(
            id=node,
            name=graph.nodes[node].name,
            child_count=len(graph.child_ids(node)),
            expandable=any(c not in rendered_set for c in graph.child_ids(node)),
        )
        for node in rendered
    )
    edges = tuple(
        TreeEdge(e.supervisor_id, e.supervisee_id, e.level.value, e.year)
        for e in sorted(graph.all_edges(), key=edge_sort_key)
        if e.supervisor_id in rendered_set and e.supervisee_id in rendered_set
    )
    return TreeView(root_id=researcher_id, nodes=nodes, edges=edges)

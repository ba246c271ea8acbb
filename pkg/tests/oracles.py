"""Brute-force reference implementations for every graph metric.

Deliberately different algorithms from the package: transitive closure
by Warshall over bitsets, longest path and ancestor generations by
exhaustive path enumeration, cousins by pairwise scan, the index by a
direct threshold sweep.  Edges are plain tuples
(supervisor, supervisee, level, year).
"""

from __future__ import annotations

from fractions import Fraction

Edge = tuple[str, str, str, int]


def node_universe(edges: list[Edge], extra: set[str] = frozenset()) -> list[str]:
    nodes = set(extra)
    for sup, sub, _, _ in edges:
        nodes.add(sup)
        nodes.add(sub)
    return sorted(nodes)


def closure(edges: list[Edge], nodes: list[str]) -> dict[str, set[str]]:
    """Reachability via >= 1 edge, computed with Warshall over bitsets."""
    pos = {node: i for i, node in enumerate(nodes)}
    reach = [0] * len(nodes)
    for sup, sub, _, _ in edges:
        reach[pos[sup]] |= 1 << pos[sub]
    for k in range(len(nodes)):
        bit = 1 << k
        for i in range(len(nodes)):
            if reach[i] & bit:
                reach[i] |= reach[k]
    return {
        node: {nodes[j] for j in range(len(nodes)) if reach[pos[node]] >> j & 1}
        for node in nodes
    }


def all_paths_from(edges: list[Edge], start: str) -> list[list[str]]:
    """Every directed path leaving `start` (including the trivial [start])."""
    children: dict[str, set[str]] = {}
    for sup, sub, _, _ in edges:
        children.setdefault(sup, set()).add(sub)
    paths: list[list[str]] = []

    def walk(path: list[str]) -> None:
        paths.append(list(path))
        for nxt in sorted(children.get(path[-1], ())):
            path.append(nxt)
            walk(path)
            path.pop()

    walk([start])
    return paths


def deepest_path_oracle(edges: list[Edge], start: str) -> list[str]:
    paths = all_paths_from(edges, start)
    longest = max(len(p) for p in paths)
    return min(p for p in paths if len(p) == longest)


def depth_oracle(edges: list[Edge], start: str) -> int:
    return len(deepest_path_oracle(edges, start)) - 1


def ancestors_oracle(edges: list[Edge], node: str) -> list[list[str]]:
    """Generation k from exhaustive enumeration of reversed paths."""
    reversed_edges = [(sub, sup, level, year) for sup, sub, level, year in edges]
    generations: dict[int, set[str]] = {}
    for path in all_paths_from(reversed_edges, node):
        for distance, ancestor in enumerate(path[1:], start=1):
            generations.setdefault(distance, set()).add(ancestor)
    return [sorted(generations[k]) for k in sorted(generations)]


def width_oracle(edges: list[Edge], node: str) -> int:
    return len({sub for sup, sub, _, _ in edges if sup == node})


def fertility_oracle(edges: list[Edge], node: str) -> int:
    supervisors = {sup for sup, _, _, _ in edges}
    children = {sub for sup, sub, _, _ in edges if sup == node}
    return len(children & supervisors)


def descendancy_oracle(reach: dict[str, set[str]], node: str) -> int:
    return len(reach[node])


def genealogical_index_oracle(edges: list[Edge], reach: dict[str, set[str]], node: str) -> int:
    values = [len(reach[child]) for child in {sub for sup, sub, _, _ in edges if sup == node}]
    best = 0
    for g in range(len(values) + 1):
        if sum(1 for v in values if v >= g) >= g:
            best = g
    return best


def relationships_oracle(edges: list[Edge], reach: dict[str, set[str]], node: str) -> int:
    inside = reach[node]
    return sum(
        1 for sup, sub, _, _ in edges if (sup == node or sup in inside) and sub in inside
    )


def cousins_oracle(edges: list[Edge], node: str, nodes: list[str]) -> int:
    parents = {n: {sup for sup, sub, _, _ in edges if sub == n} for n in nodes}
    grandparents = {n: {gp for p in parents[n] for gp in parents[p]} for n in nodes}
    count = 0
    for other in nodes:
        if other == node:
            continue
        if grandparents[other] & grandparents[node] and not parents[other] & parents[node]:
            count += 1
    return count


def timeline_oracle(edges: list[Edge], node: str) -> dict[int, tuple[int, int]]:
    years: dict[int, list[int]] = {}
    for sup, _, level, year in edges:
        if sup == node:
            pair = years.setdefault(year, [0, 0])
            pair[0 if level == "MSC" else 1] += 1
    return {year: (msc, phd) for year, (msc, phd) in sorted(years.items())}


def avg_oracle(edges: list[Edge], node: str) -> Fraction:
    own = [(year, sub) for sup, sub, _, year in edges if sup == node]
    if not own:
        return Fraction(0)
    w = len({sub for _, sub in own})
    years = [year for year, _ in own]
    return Fraction(w, max(1, max(years) - min(years)))

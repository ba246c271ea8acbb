"""Genealogy metrics over the immutable graph.

Counts are over distinct people where the phrasing says descendants
(width, fecundity, fertility, descendancy) and over edges where it says
supervisions (relationships, the yearly timeline).  The average keeps an
exact rational internally; display rounds to one decimal, half away from
zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from .graph import GenealogyGraph, deepest_path, descendants
from .records import Level

YearlyCounts = dict[int, tuple[int, int]]


def width(graph: GenealogyGraph, researcher_id: str) -> int:
    """Number of distinct direct supervisees (a.k.a. fecundity)."""
    graph.require(researcher_id)
    return len({e.supervisee_id for e in graph.out(researcher_id)})


fecundity = width


def fertility(graph: GenealogyGraph, researcher_id: str) -> int:
    """Direct supervisees who completed at least one supervision themselves."""
    graph.require(researcher_id)
    children = {e.supervisee_id for e in graph.out(researcher_id)}
    return sum(1 for child in children if graph.out(child))


def depth(graph: GenealogyGraph, researcher_id: str) -> int:
    """Edges on the longest supervision chain starting here (a.k.a. generations)."""
    return len(deepest_path(graph, researcher_id)) - 1


generations = depth


def descendancy(graph: GenealogyGraph, researcher_id: str) -> int:
    """All direct and indirect descendants, each counted once."""
    return len(descendants(graph, researcher_id))


def genealogical_index(graph: GenealogyGraph, researcher_id: str) -> int:
    """Largest g such that g direct supervisees each have descendancy >= g."""
    graph.require(researcher_id)
    children = {e.supervisee_id for e in graph.out(researcher_id)}
    values = sorted((descendancy(graph, child) for child in children), reverse=True)
    g = 0
    for rank, value in enumerate(values, start=1):
        if value >= rank:
            g = rank
    return g


def relationships(graph: GenealogyGraph, researcher_id: str) -> int:
    """Supervision edges lying inside the researcher's descendancy."""
    graph.require(researcher_id)
    within = descendants(graph, researcher_id)
    sources = within | {researcher_id}
    return sum(
        1
        for source in sources
        for edge in graph.out(source)
        if edge.supervisee_id in within
    )


def cousins(graph: GenealogyGraph, researcher_id: str) -> int:
    """People sharing an academic grandparent but no supervisor with this one."""
    graph.require(researcher_id)
    own_supervisors = set(graph.parent_ids(researcher_id))
    own_grandparents = {
        gp for parent in own_supervisors for gp in graph.parent_ids(parent)
    }
    if not own_grandparents:
        return 0
    candidates = {
        grandchild
        for gp in own_grandparents
        for child in graph.child_ids(gp)
        for grandchild in graph.child_ids(child)
    }
    candidates.discard(researcher_id)
    return sum(
        1
        for candidate in candidates
        if not own_supervisors & set(graph.parent_ids(candidate))
    )


def supervisions_by_year(graph: GenealogyGraph, researcher_id: str) -> YearlyCounts:
    """Out-edges per year, split into (msc, phd) counts."""
    graph.require(researcher_id)
    counts: dict[int, list[int]] = {}
    for edge in graph.out(researcher_id):
        pair = counts.setdefault(edge.year, [0, 0])
        pair[0 if edge.level is Level.MSC else 1] += 1
    return {year: (msc, phd) for year, (msc, phd) in sorted(counts.items())}


def year_bounds(graph: GenealogyGraph, researcher_id: str) -> tuple[int | None, int | None]:
    years = [e.year for e in graph.out(researcher_id)]
    if not years:
        return None, None
    return min(years), max(years)


def avg_supervisions_per_year(graph: GenealogyGraph, researcher_id: str) -> Fraction:
    """Tree width over the span between first and last supervision years.

    A single-year span divides by 1; a researcher with no supervisions
    averages 0.
    """
    w = width(graph, researcher_id)
    if w == 0:
        return Fraction(0)
    first, last = year_bounds(graph, researcher_id)
    return Fraction(w, max(1, last - first))


def display_average(value: Fraction) -> str:
    """One-decimal display form, rounding half away from zero."""
    quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return str(quotient.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class MetricsReport:
    researcher_id: str
    width: int
    fecundity: int
    fertility: int
    depth: int
    generations: int
    descendancy: int
    genealogical_index: int
    relationships: int
    cousins: int
    avg_supervisions_per_year: Fraction
    first_supervision_year: int | None
    last_supervision_year: int | None
    deepest_path: tuple[str, ...]
    timeline: YearlyCounts


def metrics_report(graph: GenealogyGraph, researcher_id: str) -> MetricsReport:
    """Every metric from one consistent graph snapshot."""
    graph.require(researcher_id)
    w = width(graph, researcher_id)
    first, last = year_bounds(graph, researcher_id)
    return MetricsReport(
        researcher_id=researcher_id,
        width=w,
        fecundity=w,
        fertility=fertility(graph, researcher_id),
        depth=depth(graph, researcher_id),
        generations=depth(graph, researcher_id),
        descendancy=descendancy(graph, researcher_id),
        genealogical_index=genealogical_index(graph, researcher_id),
        relationships=relationships(graph, researcher_id),
        cousins=cousins(graph, researcher_id),
        avg_supervisions_per_year=avg_supervisions_per_year(graph, researcher_id),
        first_supervision_year=first,
        last_supervision_year=last,
        deepest_path=tuple(deepest_path(graph, researcher_id)),
        timeline=supervisions_by_year(graph, researcher_id),
    )


def report_to_dict(report: MetricsReport) -> dict:
    """JSON form: snake_case fields, the average both exact and as display text."""
    avg = report.avg_supervisions_per_year
    return {
        "researcher_id": report.researcher_id,
        "width": report.width,
        "fecundity": report.fecundity,
        "fertility": report.fertility,
        "depth": report.depth,
        "generations": report.generations,
        "descendancy": report.descendancy,
        "genealogical_index": report.genealogical_index,
        "relationships": report.relationships,
        "cousins": report.cousins,
        "avg_supervisions_per_year": {
            "numerator": avg.numerator,
            "denominator": avg.denominator,
            "display": display_average(avg),
        },
        "first_supervision_year": report.first_supervision_year,
        "last_supervision_year": report.last_supervision_year,
        "deepest_path": list(report.deepest_path),
        "timeline": {
            str(year): {"msc": msc, "phd": phd}
            for year, (msc, phd) in report.timeline.items()
        },
    }

"""acadtree: academic genealogy graph engine.

Pipeline: curriculum corpus -> researcher records -> supervision claims
-> resolved edges -> acyclic genealogy graph -> metrics, served over a
CLI and a read-only HTTP API.
"""

from .corpus import load_corpus
from .graph import (
    GenealogyGraph,
    TreeView,
    ancestors,
    build_graph,
    deepest_path,
    descendants,
    subtree_view,
)
from .linkage import (
    Direction,
    LinkReport,
    SupervisionClaim,
    SupervisionEdge,
    build_name_index,
    extract_claims,
    link_corpus,
    merge_edges,
    resolve_claims,
)
from .metrics import MetricsReport, metrics_report
from .names import normalize_name
from .parsing import DocumentFormat, parse_curriculum, serialize_curriculum
from .records import DegreeEntry, Level, ResearcherRecord, SupervisionEntry
from .repository import (
    Repository,
    build_repository,
    build_repository_from_path,
    load_repository,
    save_repository,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeEntry",
    "Direction",
    "DocumentFormat",
    "GenealogyGraph",
    "Level",
    "LinkReport",
    "MetricsReport",
    "Repository",
    "ResearcherRecord",
    "SupervisionClaim",
    "SupervisionEdge",
    "SupervisionEntry",
    "TreeView",
    "ancestors",
    "build_graph",
    "build_name_index",
    "build_repository",
    "build_repository_from_path",
    "deepest_path",
    "descendants",
    "extract_claims",
    "link_corpus",
    "load_corpus",
    "load_repository",
    "merge_edges",
    "metrics_report",
    "normalize_name",
    "parse_curriculum",
    "resolve_claims",
    "save_repository",
    "serialize_curriculum",
    "subtree_view",
]

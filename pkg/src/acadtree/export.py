"""Tree view exports: JSON document and Graphviz DOT."""

from __future__ import annotations

from .graph import TreeView

_LEVEL_COLORS = {"PHD": "#1f77b4", "MSC": "#ff7f0e"}


def tree_view_to_dict(view: TreeView) -> dict:
    return {
        "root_id": view.root_id,
        "nodes": [
            {
                "id": node.id,
                "name": node.name,
                "child_count": node.child_count,
                "expandable": node.expandable,
            }
            for node in view.nodes
        ],
        "edges": [
            {
                "supervisor_id": edge.supervisor_id,
                "supervisee_id": edge.supervisee_id,
                "level": edge.level,
                "year": edge.year,
            }
            for edge in view.edges
        ],
    }


def tree_view_to_dot(view: TreeView) -> str:
    lines = ["digraph genealogy {", "  rankdir=TB;"]
    for node in view.nodes:
        lines.append(f'  {_quote(node.id)} [label={_quote(node.name)}];')
    for edge in view.edges:
        color = _LEVEL_COLORS[edge.level]
        lines.append(
            f"  {_quote(edge.supervisor_id)} -> {_quote(edge.supervisee_id)}"
            f' [label="{edge.level}", level="{edge.level}", color="{color}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _quote(value: str) -> str:
    escaped = value.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'

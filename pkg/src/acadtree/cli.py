"""Operator command line: build a repository, query it, launch the service.

Exit codes: 0 success (parse failures inside a buildable corpus included),
1 data error, 2 usage error.  Logs go to stderr, data to stdout.
"""

from __future__ import annotations

import json
import socket
import sys
from pathlib import Path

import click

from . import serialize
from .api import QueryIndex, create_app, search_researchers
from .errors import AcadtreeError, BadPagination, QueryTooShort
from .export import tree_view_to_dict, tree_view_to_dot
from .graph import subtree_view
from .linkage import extract_claims
from .metrics import display_average, metrics_report, report_to_dict
from .repository import Repository, build_repository_from_path, load_repository, save_repository


@click.group()
@click.version_option(package_name="acadtree")
def main() -> None:
    """Academic genealogy graph tools."""


def _load_repo(path: str) -> Repository:
    try:
        return load_repository(path)
    except AcadtreeError as exc:
        raise click.ClickException(str(exc)) from exc


@main.command()
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
def build(corpus_path: str, out_path: str) -> None:
    """Run the full pipeline: parse, link, build the graph, persist."""
    try:
        repo = build_repository_from_path(corpus_path)
    except AcadtreeError as exc:
        raise click.ClickException(str(exc)) from exc

    save_repository(repo, out_path)
    _write_debug_artifacts(repo, Path(out_path) / "debug")

    for failure in repo.load_report.failures:
        click.echo(f"warning: {failure.source}: {failure.message}", err=True)
    report = repo.link_report
    click.echo(
        f"records={len(repo.corpus)}"
        f" edges={sum(len(v) for v in repo.graph.out_edges.values())}"
        f" ambiguous={len(report.ambiguous_claims)}"
        f" unmatched={len(report.unmatched_claims)}"
        f" cycles={len(repo.cycle_report)}"
    )


def _write_debug_artifacts(repo: Repository, debug_dir: Path) -> None:
    # Stage artifacts for pipeline debugging; not part of the load contract.
    debug_dir.mkdir(parents=True, exist_ok=True)
    claims = [claim for record in repo.corpus for claim in extract_claims(record)]
    claim_lines = sorted(
        serialize.dumps(serialize.claim_to_dict(claim)) for claim in claims
    )
    with (debug_dir / "claims.jsonl").open("w", encoding="utf-8", newline="\n") as fh:
        for line in claim_lines:
            fh.write(line + "\n")
    (debug_dir / "link_report.json").write_text(
        serialize.dumps(serialize.link_report_to_dict(repo.link_report)) + "\n",
        encoding="utf-8",
    )
    (debug_dir / "load_report.json").write_text(
        serialize.dumps(serialize.load_report_to_dict(repo.load_report)) + "\n",
        encoding="utf-8",
    )


@main.command()
@click.option("--repo", "repo_path", required=True, type=click.Path(exists=True))
@click.option("--id", "researcher_id", required=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON report.")
def metrics(repo_path: str, researcher_id: str, as_json: bool) -> None:
    """Print the metrics report for one researcher."""
    repo = _load_repo(repo_path)
    try:
        report = metrics_report(repo.graph, researcher_id)
    except AcadtreeError as exc:
        raise click.ClickException(str(exc)) from exc

    if as_json:
        click.echo(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
        return
    click.echo(f"researcher: {researcher_id} ({repo.graph.nodes[researcher_id].name})")
    click.echo(f"width: {report.width}")
    click.echo(f"fertility: {report.fertility}")
    click.echo(f"depth: {report.depth}")
    click.echo(f"descendancy: {report.descendancy}")
    click.echo(f"genealogical index: {report.genealogical_index}")
    click.echo(f"relationships: {report.relationships}")
    click.echo(f"cousins: {report.cousins}")
    click.echo(f"avg supervisions/year: {display_average(report.avg_supervisions_per_year)}")
    if report.first_supervision_year is not None:
        click.echo(
            f"supervision years: {report.first_supervision_year}-{report.last_supervision_year}"
        )
    click.echo("deepest path: " + " -> ".join(report.deepest_path))


@main.command()
@click.option("--repo", "repo_path", required=True, type=click.Path(exists=True))
@click.option("--id", "researcher_id", required=True)
@click.option("--depth", "view_depth", default=1, show_default=True, type=click.IntRange(min=0))
@click.option("--format", "fmt", required=True, type=click.Choice(["dot", "json"]))
@click.option("--out", "out_file", type=click.Path(), default=None, help="Write here instead of stdout.")
def export(repo_path: str, researcher_id: str, view_depth: int, fmt: str, out_file: str | None) -> None:
    """Write a subtree view of the given researcher."""
    repo = _load_repo(repo_path)
    try:
        view = subtree_view(repo.graph, researcher_id, depth=view_depth)
    except AcadtreeError as exc:
        raise click.ClickException(str(exc)) from exc
    if fmt == "dot":
        rendered = tree_view_to_dot(view)
    else:
        rendered = json.dumps(tree_view_to_dict(view), indent=2, sort_keys=True) + "\n"
    if out_file:
        Path(out_file).write_text(rendered, encoding="utf-8")
    else:
        click.echo(rendered, nl=False)


@main.command()
@click.option("--repo", "repo_path", required=True, type=click.Path(exists=True))
@click.option("--name", required=True)
@click.option("--institution", default=None)
@click.option("--area", default=None)
@click.option("--page", default=1, type=int, show_default=True)
@click.option("--page-size", default=20, type=int, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON result page.")
def search(
    repo_path: str,
    name: str,
    institution: str | None,
    area: str | None,
    page: int,
    page_size: int,
    as_json: bool,
) -> None:
    """Search researchers by name with optional institution/area filters."""
    repo = _load_repo(repo_path)
    try:
        result = search_researchers(
            QueryIndex(repo), name, institution=institution, area=area,
            page=page, page_size=page_size,
        )
    except (QueryTooShort, BadPagination) as exc:
        raise click.UsageError(str(exc)) from exc

    if as_json:
        click.echo(json.dumps(result, indent=2, sort_keys=True))
        return
    click.echo(f"{result['total_matches']} match(es)", err=True)
    for row in result["results"]:
        institution_text = row["institution"] or "-"
        click.echo(
            f"{row['id']}\t{row['name']}\t{institution_text}"
            f"\twidth={row['width']}\tdescendancy={row['descendancy']}"
        )


@main.command()
@click.option("--repo", "repo_path", required=True, type=click.Path(exists=True))
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui", "ui_dir", type=click.Path(exists=True), default=None,
              help="Also serve this directory of static web assets at /.")
def serve(repo_path: str, port: int, host: str, ui_dir: str | None) -> None:
    """Start the read-only HTTP API."""
    import uvicorn

    repo = _load_repo(repo_path)
    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.bind((host, port))
        probe.close()
    except OSError as exc:
        raise click.ClickException(f"cannot bind {host}:{port}: {exc}") from exc

    app = create_app(repo)
    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    click.echo(f"serving repository {repo_path} on http://{host}:{port}", err=True)
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    sys.exit(main())

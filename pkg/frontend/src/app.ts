import { ApiClient, ApiError } from "./api.js";
import { renderCurriculumPanel } from "./curriculumPanel.js";
import { renderMetricsPanel } from "./metricsPanel.js";
import {
  renderSearchPage,
  renderSearchResults,
  type SearchPageElements,
} from "./searchPage.js";
import { decodeState, encodeState, type Tab, type ViewState } from "./state.js";
import { renderTimeline } from "./timeline.js";
import { TreeCanvas } from "./tree.js";
import type { TreeViewPayload } from "./types.js";

interface ResearcherEls {
  name: HTMLElement;
  banner: HTMLElement;
  supervisorsButton: HTMLButtonElement;
  supervisorsPanel: HTMLElement;
  treeWrap: HTMLElement;
  tabButtons: Map<Tab, HTMLButtonElement>;
  tabPanel: HTMLElement;
}

export class App {
  state: ViewState;
  private readonly container: HTMLElement;
  private readonly api: ApiClient;
  private treeCanvas: TreeCanvas | null = null;
  private currentView: TreeViewPayload | null = null;
  private researcherEls: ResearcherEls | null = null;
  private searchEls: SearchPageElements | null = null;
  private renderedRoot: string | null = null;
  private treeSeq = 0;
  private tasks: Promise<unknown> = Promise.resolve();

  constructor(container: HTMLElement, api: ApiClient) {
    this.container = container;
    this.api = api;
    this.state = decodeState(window.location.search);
    window.addEventListener("popstate", () => {
      this.state = decodeState(window.location.search);
      this.renderedRoot = null; // force a rebuild on history navigation
      this.track(this.render());
    });
  }

  start(): Promise<void> {
    const task = this.render();
    this.track(task);
    return task;
  }

  /** Resolves once every queued fetch/render task has finished. */
  async settled(): Promise<void> {
    let current;
    do {
      current = this.tasks;
      await current.catch(() => undefined);
    } while (current !== this.tasks);
  }

  private track<T>(task: Promise<T>): Promise<T> {
    this.tasks = this.tasks.then(() => task.catch(() => undefined));
    return task;
  }

  private navigate(partial: Partial<ViewState>, { push = true } = {}): Promise<void> {
    this.state = { ...this.state, ...partial };
    const url = window.location.pathname + encodeState(this.state);
    if (push) {
      window.history.pushState(null, "", url);
    } else {
      window.history.replaceState(null, "", url);
    }
    return this.track(this.render());
  }

  // -- top-level rendering ------------------------------------------------

  private async render(): Promise<void> {
    if (!this.state.rootId) {
      this.renderSearchPage();
      if (this.state.query.length >= 2) await this.runSearch();
      return;
    }
    await this.renderResearcher();
  }

  private renderSearchPage(): void {
    this.renderedRoot = null;
    this.researcherEls = null;
    this.treeCanvas = null;
    this.currentView = null;
    this.container.textContent = "";
    const heading = document.createElement("h1");
    heading.textContent = "Academic genealogy explorer";
    this.container.appendChild(heading);
    const host = document.createElement("div");
    this.container.appendChild(host);
    this.searchEls = renderSearchPage(
      host,
      {
        onSearch: (query, institution, area) =>
          this.navigate({ query, institution, area }),
        onPick: (id) => this.navigate({ rootId: id, expanded: [] }),
      },
      this.state,
    );
  }

  private async runSearch(): Promise<void> {
    if (!this.searchEls) return;
    const els = this.searchEls;
    try {
      const payload = await this.api.search(this.state.query, {
        institution: this.state.institution,
        area: this.state.area,
        pageSize: 50,
      });
      renderSearchResults(els, payload, {
        onSearch: () => undefined,
        onPick: (id) => this.navigate({ rootId: id, expanded: [] }),
      });
    } catch (error) {
      els.validation.textContent = describe(error);
    }
  }

  // -- researcher view ----------------------------------------------------

  private async renderResearcher(): Promise<void> {
    const rootId = this.state.rootId!;
    if (this.renderedRoot !== rootId) {
      this.buildResearcherScaffold();
      this.renderedRoot = rootId;
      this.currentView = null;
    }
    await Promise.all([this.refreshTree(), this.renderActiveTab()]);
  }

  private buildResearcherScaffold(): void {
    this.container.textContent = "";
    this.searchEls = null;

    const toolbar = document.createElement("header");
    toolbar.className = "toolbar";
    const back = document.createElement("button");
    back.type = "button";
    back.className = "back-link";
    back.textContent = "← search";
    back.addEventListener("click", () => this.navigate({ rootId: null, expanded: [] }));
    const name = document.createElement("h2");
    name.className = "researcher-name";
    const supervisorsButton = document.createElement("button");
    supervisorsButton.type = "button";
    supervisorsButton.className = "show-supervisors";
    supervisorsButton.textContent = "▲ Show supervisors";
    supervisorsButton.addEventListener("click", () => this.track(this.toggleSupervisors()));
    toolbar.append(back, name, supervisorsButton);

    const banner = document.createElement("div");
    banner.className = "error-banner";
    banner.hidden = true;

    const supervisorsPanel = document.createElement("div");
    supervisorsPanel.className = "supervisors-panel";
    supervisorsPanel.hidden = true;

    const treeWrap = document.createElement("div");
    treeWrap.className = "tree-wrap";

    const tabs = document.createElement("nav");
    tabs.className = "tabs";
    const tabButtons = new Map<Tab, HTMLButtonElement>();
    for (const tab of ["curriculum", "metrics"] as Tab[]) {
      const button = document.createElement("button");
      button.type = "button";
      button.dataset.tab = tab;
      button.textContent = tab === "curriculum" ? "Curriculum data" : "Metrics";
      button.addEventListener("click", () => this.navigate({ tab }, { push: false }));
      tabs.appendChild(button);
      tabButtons.set(tab, button);
    }

    const tabPanel = document.createElement("section");
    tabPanel.className = "tab-panel";

    this.container.append(toolbar, banner, supervisorsPanel, treeWrap, tabs, tabPanel);
    this.researcherEls = {
      name, banner, supervisorsButton, supervisorsPanel, treeWrap, tabButtons, tabPanel,
    };
    this.treeCanvas = new TreeCanvas(treeWrap, {
      onToggleNode: (id, open) => this.track(this.toggleNode(id, open)),
    });
  }

  private async refreshTree(): Promise<void> {
    const els = this.researcherEls!;
    const rootId = this.state.rootId!;
    const seq = ++this.treeSeq;
    try {
      const view = await this.api.tree(rootId, this.state.expanded);
      if (seq !== this.treeSeq) return; // superseded by a newer request
      this.currentView = view;
      els.banner.hidden = true;
      els.name.textContent = view.nodes.find((n) => n.id === rootId)?.name ?? rootId;
      this.treeCanvas!.render(view);
    } catch (error) {
      if (seq !== this.treeSeq) return;
      els.banner.textContent = describe(error);
      els.banner.hidden = false; // previous view stays on canvas
      const staleSharedUrl =
        error instanceof ApiError &&
        error.code === "INVALID_EXPANSION" &&
        this.currentView === null &&
        this.state.expanded.length > 0;
      if (staleSharedUrl) {
        // a shared link older than the repository: degrade to the bare root
        this.state = { ...this.state, expanded: [] };
        window.history.replaceState(
          null, "", window.location.pathname + encodeState(this.state),
        );
        await this.refreshTree();
        els.banner.textContent = describe(error);
        els.banner.hidden = false;
      }
    }
  }

  private async toggleNode(id: string, currentlyOpen: boolean): Promise<void> {
    if (id === this.state.rootId) return; // the root is always open
    const previous = this.state.expanded;
    const expanded = currentlyOpen
      ? pruneExpanded(this.currentView!, previous, id)
      : [...previous, id];
    await this.navigate({ expanded });
    if (this.researcherEls && !this.researcherEls.banner.hidden) {
      // expansion failed server-side; roll the state back, keep the banner
      this.state = { ...this.state, expanded: previous };
      window.history.replaceState(
        null, "", window.location.pathname + encodeState(this.state),
      );
    }
  }

  private async renderActiveTab(): Promise<void> {
    const els = this.researcherEls!;
    const rootId = this.state.rootId!;
    for (const [tab, button] of els.tabButtons) {
      button.classList.toggle("is-active", tab === this.state.tab);
    }
    els.tabPanel.textContent = "";
    try {
      if (this.state.tab === "curriculum") {
        renderCurriculumPanel(els.tabPanel, await this.api.detail(rootId));
      } else {
        const [metrics, deepest] = await Promise.all([
          this.api.metrics(rootId),
          this.api.deepestPath(rootId),
        ]);
        const metricsHost = document.createElement("div");
        const timelineHost = document.createElement("div");
        timelineHost.className = "timeline-host";
        els.tabPanel.append(metricsHost, timelineHost);
        renderMetricsPanel(metricsHost, metrics, deepest.path, {
          onPathStep: (id) => this.navigate({ rootId: id, expanded: [] }),
        });
        renderTimeline(timelineHost, metrics.timeline);
      }
    } catch (error) {
      const failure = document.createElement("p");
      failure.className = "empty-notice";
      failure.textContent = describe(error);
      els.tabPanel.appendChild(failure);
    }
  }

  private async toggleSupervisors(): Promise<void> {
    const els = this.researcherEls!;
    if (!els.supervisorsPanel.hidden) {
      els.supervisorsPanel.hidden = true;
      return;
    }
    try {
      const payload = await this.api.ancestors(this.state.rootId!);
      els.supervisorsPanel.textContent = "";
      if (payload.generations.length === 0) {
        const none = document.createElement("p");
        none.className = "empty-notice";
        none.textContent = "No supervisors recorded for this researcher.";
        els.supervisorsPanel.appendChild(none);
      }
      payload.generations.forEach((generation, index) => {
        const row = document.createElement("div");
        row.className = "generation";
        const label = document.createElement("span");
        label.className = "generation-label";
        label.textContent = `generation ${index + 1}:`;
        row.appendChild(label);
        for (const person of generation) {
          const chip = document.createElement("button");
          chip.type = "button";
          chip.className = "ancestor-chip";
          chip.dataset.id = person.id;
          chip.textContent = person.name;
          chip.addEventListener("click", () =>
            this.navigate({ rootId: person.id, expanded: [] }),
          );
          row.appendChild(chip);
        }
        els.supervisorsPanel.appendChild(row);
      });
      els.supervisorsPanel.hidden = false;
    } catch (error) {
      els.banner.textContent = describe(error);
      els.banner.hidden = false;
    }
  }
}

/** Keep expansions that remain visible after `removed` collapses. */
export function pruneExpanded(
  view: TreeViewPayload,
  expanded: string[],
  removed: string,
): string[] {
  const childrenOf = new Map<string, string[]>();
  for (const edge of view.edges) {
    const list = childrenOf.get(edge.supervisor_id) ?? [];
    list.push(edge.supervisee_id);
    childrenOf.set(edge.supervisor_id, list);
  }
  const keep = expanded.filter((id) => id !== removed);
  const visible = new Set<string>([view.root_id, ...(childrenOf.get(view.root_id) ?? [])]);
  const kept: string[] = [];
  const pending = new Set(keep);
  let progressed = true;
  while (progressed) {
    progressed = false;
    for (const id of keep) {
      if (pending.has(id) && visible.has(id)) {
        pending.delete(id);
        kept.push(id);
        for (const child of childrenOf.get(id) ?? []) visible.add(child);
        progressed = true;
      }
    }
  }
  return kept;
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return `${error.code}: ${error.message}`;
  return error instanceof Error ? error.message : String(error);
}

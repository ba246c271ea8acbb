import type { MetricsPayload, NamedRef } from "./types.js";

export interface MetricsHandlers {
  /** Breadcrumb step clicked: re-root the tree at that researcher. */
  onPathStep(id: string): void;
}

const ROWS: { key: keyof MetricsPayload; label: string }[] = [
  { key: "depth", label: "tree depth" },
  { key: "fertility", label: "fertility" },
  { key: "width", label: "tree width" },
  { key: "descendancy", label: "descendancy" },
  { key: "genealogical_index", label: "genealogical index" },
  { key: "fecundity", label: "fecundity" },
  { key: "generations", label: "generations" },
  { key: "relationships", label: "relationships" },
  { key: "cousins", label: "cousins" },
];

export function renderMetricsPanel(
  container: HTMLElement,
  metrics: MetricsPayload,
  path: NamedRef[],
  handlers: MetricsHandlers,
): void {
  container.textContent = "";
  const grid = document.createElement("dl");
  grid.className = "metrics-grid";
  for (const row of ROWS) {
    grid.append(metricTerm(row.label), metricValue(String(metrics[row.key]), row.key));
  }
  grid.append(
    metricTerm("avg supervisions per year"),
    metricValue(metrics.avg_supervisions_per_year.display, "avg_supervisions_per_year"),
  );
  if (metrics.first_supervision_year !== null) {
    grid.append(
      metricTerm("supervision years"),
      metricValue(
        `${metrics.first_supervision_year}–${metrics.last_supervision_year}`,
        "supervision_years",
      ),
    );
  }
  container.appendChild(grid);

  const pathBlock = document.createElement("div");
  pathBlock.className = "deepest-path";
  const caption = document.createElement("span");
  caption.className = "deepest-path-label";
  caption.textContent = "deepest supervision path:";
  pathBlock.appendChild(caption);
  path.forEach((step, index) => {
    if (index > 0) {
      const sep = document.createElement("span");
      sep.className = "crumb-sep";
      sep.textContent = "→";
      pathBlock.appendChild(sep);
    }
    const crumb = document.createElement("button");
    crumb.type = "button";
    crumb.className = "crumb";
    crumb.dataset.id = step.id;
    crumb.textContent = step.name;
    crumb.addEventListener("click", () => handlers.onPathStep(step.id));
    pathBlock.appendChild(crumb);
  });
  container.appendChild(pathBlock);
}

function metricTerm(label: string): HTMLElement {
  const dt = document.createElement("dt");
  dt.textContent = label;
  return dt;
}

function metricValue(value: string, key: string): HTMLElement {
  const dd = document.createElement("dd");
  dd.dataset.metric = key;
  dd.textContent = value;
  return dd;
}

import type { DetailPayload } from "./types.js";

export function renderCurriculumPanel(container: HTMLElement, detail: DetailPayload): void {
  container.textContent = "";
  const dl = document.createElement("dl");
  dl.className = "curriculum-grid";
  addRow(dl, "name", detail.name);
  if (detail.citation_names.length > 0) {
    addRow(dl, "citation names", detail.citation_names.join("; "));
  }
  addRow(dl, "institution", detail.institution ?? "—");
  addRow(dl, "areas", detail.areas.length > 0 ? detail.areas.join(", ") : "—");
  addRow(
    dl,
    "concluded supervisions",
    `${detail.supervision_counts.total} ` +
      `(${detail.supervision_counts.phd} doctoral, ${detail.supervision_counts.msc} master's)`,
  );
  container.appendChild(dl);

  if (detail.degrees.length > 0) {
    container.appendChild(sectionTitle("Academic degrees and titles"))
    const list = document.createElement("ul");
    list.className = "degree-list";
    for (const degree of detail.degrees) {
      const item = document.createElement("li");
      const parts = [`${degree.level} ${degree.year}`];
      if (degree.thesis) parts.push(degree.thesis);
      if (degree.supervisor) parts.push(`supervisor: ${degree.supervisor}`);
      if (degree.institution) parts.push(degree.institution);
      item.textContent = parts.join(" — ");
      list.appendChild(item);
    }
    container.appendChild(list);
  }

  if (detail.resume) {
    container.appendChild(sectionTitle("Resume"));
    const text = document.createElement("p");
    text.className = "resume";
    text.textContent = detail.resume;
    container.appendChild(text);
  }
}

function addRow(dl: HTMLDListElement, label: string, value: string): void {
  const dt = document.createElement("dt");
  dt.textContent = label;
  const dd = document.createElement("dd");
  dd.textContent = value;
  dl.append(dt, dd);
}

function sectionTitle(text: string): HTMLElement {
  const h = document.createElement("h3");
  h.textContent = text;
  return h;
}

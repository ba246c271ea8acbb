import type { TimelinePayload } from "./types.js";

// Timeline bars: doctoral blue, master's green (distinct from the
// orange used for MSc edges in the tree).
export const BAR_COLORS = { phd: "#1f77b4", msc: "#2ca02c" };

const SVG_NS = "http://www.w3.org/2000/svg";
const BAR_WIDTH = 14;
const GROUP_WIDTH = 44;
const CHART_HEIGHT = 140;
const BASELINE = CHART_HEIGHT - 24;

export function renderTimeline(container: HTMLElement, timeline: TimelinePayload): void {
  container.textContent = "";
  const years = Object.keys(timeline).sort();
  if (years.length === 0) {
    const notice = document.createElement("p");
    notice.className = "empty-notice";
    notice.textContent = "No concluded supervisions recorded.";
    container.appendChild(notice);
    return;
  }

  const peak = Math.max(...years.map((y) => Math.max(timeline[y].msc, timeline[y].phd)));
  const scale = (BASELINE - 16) / Math.max(1, peak);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "timeline-chart");
  svg.setAttribute("width", String(years.length * GROUP_WIDTH + 20));
  svg.setAttribute("height", String(CHART_HEIGHT));

  years.forEach((year, index) => {
    const counts = timeline[year];
    const groupX = index * GROUP_WIDTH + 10;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "year-group");
    group.setAttribute("data-year", year);

    const title = document.createElementNS(SVG_NS, "title");
    title.textContent =
      `${year}: ${counts.phd} doctoral, ${counts.msc} master's ` +
      `(total ${counts.phd + counts.msc})`;
    group.appendChild(title);

    group.appendChild(bar(groupX, counts.phd, scale, "phd"));
    group.appendChild(bar(groupX + BAR_WIDTH + 2, counts.msc, scale, "msc"));

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("class", "year-label");
    label.setAttribute("x", String(groupX + BAR_WIDTH + 1));
    label.setAttribute("y", String(BASELINE + 14));
    label.textContent = year;
    group.appendChild(label);
    svg.appendChild(group);
  });
  container.appendChild(svg);
}

function bar(x: number, count: number, scale: number, kind: "msc" | "phd"): SVGRectElement {
  const height = count * scale;
  const rect = document.createElementNS(SVG_NS, "rect");
  rect.setAttribute("class", `bar bar-${kind}`);
  rect.setAttribute("fill", BAR_COLORS[kind]);
  rect.setAttribute("x", String(x));
  rect.setAttribute("y", String(BASELINE - height));
  rect.setAttribute("width", String(BAR_WIDTH));
  rect.setAttribute("height", String(height));
  rect.setAttribute("data-count", String(count));
  return rect;
}

import type { TreeEdgePayload, TreeViewPayload } from "./types.js";

// Doctoral supervisions draw in blue, master's in orange.
export const LEVEL_COLORS: Record<"PHD" | "MSC", string> = {
  PHD: "#1f77b4",
  MSC: "#ff7f0e",
};

// Children beyond this count hide behind a "show more" node so wide
// trees stay readable.
export const CHILD_PAGE_SIZE = 25;

const COL_WIDTH = 170;
const ROW_HEIGHT = 110;
const NODE_WIDTH = 140;
const NODE_HEIGHT = 46;
const SVG_NS = "http://www.w3.org/2000/svg";

export interface TreeHandlers {
  /** Node with children clicked: expand (open=false) or collapse (open=true). */
  onToggleNode(id: string, currentlyOpen: boolean): void;
}

interface Placed {
  x: number;
  y: number;
  depth: number;
}

export interface TreeLayout {
  positions: Map<string, Placed>;
  edges: TreeEdgePayload[];
  /** parent id -> count of children hidden behind its "show more" node. */
  more: Map<string, { x: number; y: number; hidden: number }>;
  /** ids whose children (at least one) are rendered. */
  openIds: Set<string>;
}

export function computeLayout(
  view: TreeViewPayload,
  windows: Map<string, number>,
): TreeLayout {
  const order = new Map(view.nodes.map((node, index) => [node.id, index]));
  const childrenOf = new Map<string, string[]>();
  for (const edge of view.edges) {
    const list = childrenOf.get(edge.supervisor_id) ?? [];
    if (!list.includes(edge.supervisee_id)) list.push(edge.supervisee_id);
    childrenOf.set(edge.supervisor_id, list);
  }
  for (const list of childrenOf.values()) {
    list.sort((a, b) => (order.get(a) ?? 0) - (order.get(b) ?? 0));
  }

  const windowOf = (parent: string) => windows.get(parent) ?? CHILD_PAGE_SIZE;
  const depth = new Map<string, number>([[view.root_id, 0]]);
  const visitedInOrder: string[] = [view.root_id];
  const queue = [view.root_id];
  const more = new Map<string, { x: number; y: number; hidden: number }>();
  while (queue.length > 0) {
    const parent = queue.shift()!;
    const children = childrenOf.get(parent) ?? [];
    const visible = children.slice(0, windowOf(parent));
    for (const child of visible) {
      if (!depth.has(child)) {
        depth.set(child, depth.get(parent)! + 1);
        visitedInOrder.push(child);
        queue.push(child);
      }
    }
    if (children.length > visible.length) {
      more.set(parent, { x: 0, y: 0, hidden: children.length - visible.length });
    }
  }

  const rows = new Map<number, string[]>();
  for (const id of visitedInOrder) {
    const d = depth.get(id)!;
    const row = rows.get(d) ?? [];
    row.push(id);
    rows.set(d, row);
  }
  for (const row of rows.values()) {
    row.sort((a, b) => (order.get(a) ?? 0) - (order.get(b) ?? 0));
  }

  const positions = new Map<string, Placed>();
  const slotCount = new Map<number, number>();
  for (const [d, row] of [...rows.entries()].sort((a, b) => a[0] - b[0])) {
    for (const id of row) {
      const slot = slotCount.get(d) ?? 0;
      slotCount.set(d, slot + 1);
      positions.set(id, { x: slot * COL_WIDTH + 20, y: d * ROW_HEIGHT + 20, depth: d });
    }
  }
  for (const [parent, marker] of more) {
    const d = depth.get(parent)! + 1;
    const slot = slotCount.get(d) ?? 0;
    slotCount.set(d, slot + 1);
    marker.x = slot * COL_WIDTH + 20;
    marker.y = d * ROW_HEIGHT + 20;
  }

  const visibleEdges = view.edges.filter(
    (edge) => positions.has(edge.supervisor_id) && positions.has(edge.supervisee_id),
  );
  const openIds = new Set<string>();
  for (const edge of visibleEdges) openIds.add(edge.supervisor_id);
  return { positions, edges: visibleEdges, more, openIds };
}

export class TreeCanvas {
  private readonly svg: SVGSVGElement;
  private readonly edgeLayer: SVGGElement;
  private readonly nodeLayer: SVGGElement;
  private readonly nodeEls = new Map<string, SVGGElement>();
  private readonly edgeEls = new Map<string, SVGLineElement>();
  private readonly moreEls = new Map<string, SVGGElement>();
  private readonly windows = new Map<string, number>();
  private view: TreeViewPayload | null = null;

  constructor(container: HTMLElement, private readonly handlers: TreeHandlers) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("class", "tree-canvas");
    this.edgeLayer = document.createElementNS(SVG_NS, "g");
    this.edgeLayer.setAttribute("class", "edges");
    this.nodeLayer = document.createElementNS(SVG_NS, "g");
    this.nodeLayer.setAttribute("class", "nodes");
    this.svg.append(this.edgeLayer, this.nodeLayer);
    container.appendChild(this.svg);
  }

  render(view: TreeViewPayload): void {
    if (this.view?.root_id !== view.root_id) this.windows.clear();
    this.view = view;
    this.paint();
  }

  nodeElement(id: string): SVGGElement | undefined {
    return this.nodeEls.get(id);
  }

  private paint(): void {
    const view = this.view!;
    const layout = computeLayout(view, this.windows);
    this.syncEdges(layout);
    this.syncNodes(view, layout);
    this.syncMoreMarkers(layout);
    this.resize(layout);
  }

  private syncEdges(layout: TreeLayout): void {
    const wanted = new Set<string>();
    for (const edge of layout.edges) {
      const key = `${edge.supervisor_id}>${edge.supervisee_id}>${edge.level}`;
      wanted.add(key);
      let el = this.edgeEls.get(key);
      if (!el) {
        el = document.createElementNS(SVG_NS, "line");
        el.setAttribute("class", `tree-edge edge-${edge.level.toLowerCase()}`);
        el.setAttribute("stroke", LEVEL_COLORS[edge.level]);
        el.setAttribute("stroke-width", "2");
        el.setAttribute("data-level", edge.level);
        const title = document.createElementNS(SVG_NS, "title");
        title.textContent = `${edge.level} supervision, ${edge.year}`;
        el.appendChild(title);
        this.edgeLayer.appendChild(el);
        this.edgeEls.set(key, el);
      }
      const from = layout.positions.get(edge.supervisor_id)!;
      const to = layout.positions.get(edge.supervisee_id)!;
      el.setAttribute("x1", String(from.x + NODE_WIDTH / 2));
      el.setAttribute("y1", String(from.y + NODE_HEIGHT));
      el.setAttribute("x2", String(to.x + NODE_WIDTH / 2));
      el.setAttribute("y2", String(to.y));
    }
    for (const [key, el] of this.edgeEls) {
      if (!wanted.has(key)) {
        el.remove();
        this.edgeEls.delete(key);
      }
    }
  }

  private syncNodes(view: TreeViewPayload, layout: TreeLayout): void {
    const byId = new Map(view.nodes.map((node) => [node.id, node]));
    for (const [id, el] of this.nodeEls) {
      if (!layout.positions.has(id)) {
        el.remove();
        this.nodeEls.delete(id);
      }
    }
    for (const [id, placed] of layout.positions) {
      const node = byId.get(id);
      if (!node) continue;
      let el = this.nodeEls.get(id);
      if (!el) {
        el = document.createElementNS(SVG_NS, "g");
        el.setAttribute("class", "tree-node");
        el.setAttribute("data-id", id);
        const rect = document.createElementNS(SVG_NS, "rect");
        rect.setAttribute("width", String(NODE_WIDTH));
        rect.setAttribute("height", String(NODE_HEIGHT));
        rect.setAttribute("rx", "6");
        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("class", "node-name");
        label.setAttribute("x", String(NODE_WIDTH / 2));
        label.setAttribute("y", "20");
        const badge = document.createElementNS(SVG_NS, "text");
        badge.setAttribute("class", "node-badge");
        badge.setAttribute("x", String(NODE_WIDTH / 2));
        badge.setAttribute("y", "38");
        el.append(rect, label, badge);
        el.addEventListener("click", () => this.onNodeClick(id));
        this.nodeLayer.appendChild(el);
        this.nodeEls.set(id, el);
      }
      el.setAttribute("transform", `translate(${placed.x},${placed.y})`);
      const open = layout.openIds.has(id);
      el.classList.toggle("is-open", open);
      el.classList.toggle("is-expandable", node.expandable);
      el.classList.toggle("is-root", id === view.root_id);
      el.querySelector(".node-name")!.textContent = trimLabel(node.name);
      const badge = el.querySelector(".node-badge")!;
      if (node.child_count === 0) {
        badge.textContent = "";
      } else if (node.expandable) {
        badge.textContent = `▸ ${node.child_count} supervisee${node.child_count > 1 ? "s" : ""}`;
      } else if (open) {
        badge.textContent = "▾ collapse";
      } else {
        badge.textContent = `${node.child_count}`;
      }
    }
  }

  private syncMoreMarkers(layout: TreeLayout): void {
    for (const [parent, el] of this.moreEls) {
      if (!layout.more.has(parent)) {
        el.remove();
        this.moreEls.delete(parent);
      }
    }
    for (const [parent, marker] of layout.more) {
      let el = this.moreEls.get(parent);
      if (!el) {
        el = document.createElementNS(SVG_NS, "g");
        el.setAttribute("class", "tree-node show-more");
        el.setAttribute("data-parent", parent);
        const rect = document.createElementNS(SVG_NS, "rect");
        rect.setAttribute("width", String(NODE_WIDTH));
        rect.setAttribute("height", String(NODE_HEIGHT));
        rect.setAttribute("rx", "6");
        const label = document.createElementNS(SVG_NS, "text");
        label.setAttribute("class", "node-name");
        label.setAttribute("x", String(NODE_WIDTH / 2));
        label.setAttribute("y", "28");
        el.append(rect, label);
        el.addEventListener("click", () => this.onShowMore(parent));
        this.nodeLayer.appendChild(el);
        this.moreEls.set(parent, el);
      }
      el.setAttribute("transform", `translate(${marker.x},${marker.y})`);
      el.querySelector(".node-name")!.textContent = `show ${marker.hidden} more…`;
    }
  }

  private onNodeClick(id: string): void {
    const view = this.view;
    if (!view) return;
    const node = view.nodes.find((n) => n.id === id);
    if (!node || node.child_count === 0) return;
    const open = computeLayout(view, this.windows).openIds.has(id);
    this.handlers.onToggleNode(id, open);
  }

  private onShowMore(parent: string): void {
    const current = this.windows.get(parent) ?? CHILD_PAGE_SIZE;
    this.windows.set(parent, current + CHILD_PAGE_SIZE);
    this.paint();
  }

  private resize(layout: TreeLayout): void {
    let maxX = 0;
    let maxY = 0;
    for (const placed of layout.positions.values()) {
      maxX = Math.max(maxX, placed.x + NODE_WIDTH);
      maxY = Math.max(maxY, placed.y + NODE_HEIGHT);
    }
    for (const marker of layout.more.values()) {
      maxX = Math.max(maxX, marker.x + NODE_WIDTH);
      maxY = Math.max(maxY, marker.y + NODE_HEIGHT);
    }
    this.svg.setAttribute("width", String(maxX + 20));
    this.svg.setAttribute("height", String(maxY + 20));
  }
}

function trimLabel(name: string): string {
  return name.length > 22 ? `${name.slice(0, 21)}…` : name;
}

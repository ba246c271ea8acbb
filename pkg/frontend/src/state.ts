// The whole view is reconstructable from the URL query string, so any
// address the explorer produces is a shareable link.

export type Tab = "curriculum" | "metrics";

export interface ViewState {
  rootId: string | null;
  expanded: string[];
  tab: Tab;
  query: string;
  institution: string;
  area: string;
}

export const DEFAULT_STATE: ViewState = {
  rootId: null,
  expanded: [],
  tab: "metrics",
  query: "",
  institution: "",
  area: "",
};

function dedupe(ids: string[]): string[] {
  return [...new Set(ids.filter((id) => id.length > 0))];
}

export function encodeState(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.rootId) params.set("root", state.rootId);
  const expanded = dedupe(state.expanded);
  if (expanded.length > 0) params.set("expanded", expanded.join(","));
  if (state.tab !== DEFAULT_STATE.tab) params.set("tab", state.tab);
  if (state.query) params.set("q", state.query);
  if (state.institution) params.set("institution", state.institution);
  if (state.area) params.set("area", state.area);
  const encoded = params.toString();
  return encoded ? `?${encoded}` : "";
}

export function decodeState(search: string): ViewState {
  const params = new URLSearchParams(search.startsWith("?") ? search.slice(1) : search);
  const tab = params.get("tab");
  return {
    rootId: params.get("root") || null,
    expanded: dedupe((params.get("expanded") ?? "").split(",")),
    tab: tab === "curriculum" ? "curriculum" : DEFAULT_STATE.tab,
    query: params.get("q") ?? "",
    institution: params.get("institution") ?? "",
    area: params.get("area") ?? "",
  };
}

// Payloads captured verbatim from the genealogy API serving the bundled
// six-researcher corpus (chain A->B->D->F with side branches C and E).

import type {
  AncestorsPayload,
  DeepestPathPayload,
  DetailPayload,
  MetricsPayload,
  SearchPayload,
  TimelinePayload,
  TreeViewPayload,
} from "../src/types.js";

export const treeRoot: TreeViewPayload = {
  root_id: "A",
  nodes: [
    { id: "A", name: "Alice Amaral", child_count: 2, expandable: false },
    { id: "B", name: "Bruno Bastos", child_count: 2, expandable: true },
    { id: "C", name: "Carla Couto", child_count: 0, expandable: false },
  ],
  edges: [
    { supervisor_id: "A", supervisee_id: "B", level: "PHD", year: 1990 },
    { supervisor_id: "A", supervisee_id: "C", level: "MSC", year: 1992 },
  ],
};

export const treeExpandedB: TreeViewPayload = {
  root_id: "A",
  nodes: [
    { id: "A", name: "Alice Amaral", child_count: 2, expandable: false },
    { id: "B", name: "Bruno Bastos", child_count: 2, expandable: false },
    { id: "C", name: "Carla Couto", child_count: 0, expandable: false },
    { id: "D", name: "Davi Duarte", child_count: 1, expandable: true },
    { id: "E", name: "Elisa Esteves", child_count: 0, expandable: false },
  ],
  edges: [
    { supervisor_id: "A", supervisee_id: "B", level: "PHD", year: 1990 },
    { supervisor_id: "A", supervisee_id: "C", level: "MSC", year: 1992 },
    { supervisor_id: "B", supervisee_id: "D", level: "PHD", year: 1995 },
    { supervisor_id: "B", supervisee_id: "E", level: "MSC", year: 1996 },
  ],
};

export const treeRootD: TreeViewPayload = {
  root_id: "D",
  nodes: [
    { id: "D", name: "Davi Duarte", child_count: 1, expandable: false },
    { id: "F", name: "Fábio Ferraz", child_count: 0, expandable: false },
  ],
  edges: [{ supervisor_id: "D", supervisee_id: "F", level: "PHD", year: 2001 }],
};

export const metricsA: MetricsPayload = {
  researcher_id: "A",
  width: 2,
  fecundity: 2,
  fertility: 1,
  depth: 3,
  generations: 3,
  descendancy: 5,
  genealogical_index: 1,
  relationships: 5,
  cousins: 0,
  avg_supervisions_per_year: { numerator: 1, denominator: 1, display: "1.0" },
  first_supervision_year: 1990,
  last_supervision_year: 1992,
  deepest_path: ["A", "B", "D", "F"],
  timeline: { "1990": { msc: 0, phd: 1 }, "1992": { msc: 1, phd: 0 } },
};

export const metricsF: MetricsPayload = {
  researcher_id: "F",
  width: 0,
  fecundity: 0,
  fertility: 0,
  depth: 0,
  generations: 0,
  descendancy: 0,
  genealogical_index: 0,
  relationships: 0,
  cousins: 0,
  avg_supervisions_per_year: { numerator: 0, denominator: 1, display: "0.0" },
  first_supervision_year: null,
  last_supervision_year: null,
  deepest_path: ["F"],
  timeline: {},
};

export const detailA: DetailPayload = {
  id: "A",
  name: "Alice Amaral",
  citation_names: [],
  institution: "Universidade de São Paulo",
  areas: ["Genetics"],
  degrees: [],
  supervisions_declared: [
    { level: "PHD", year: 1990, supervisee: "Bruno Bastos" },
    { level: "MSC", year: 1992, supervisee: "Carla Couto" },
  ],
  supervision_counts: { msc: 1, phd: 1, total: 2 },
  resume: null,
};

export const timelineA: TimelinePayload = {
  "1990": { msc: 0, phd: 1 },
  "1992": { msc: 1, phd: 0 },
};

export const ancestorsF: AncestorsPayload = {
  researcher_id: "F",
  generations: [
    [{ id: "D", name: "Davi Duarte" }],
    [{ id: "B", name: "Bruno Bastos" }],
    [{ id: "A", name: "Alice Amaral" }],
  ],
};

export const ancestorsA: AncestorsPayload = { researcher_id: "A", generations: [] };

export const deepestA: DeepestPathPayload = {
  researcher_id: "A",
  path: [
    { id: "A", name: "Alice Amaral" },
    { id: "B", name: "Bruno Bastos" },
    { id: "D", name: "Davi Duarte" },
    { id: "F", name: "Fábio Ferraz" },
  ],
};

export const deepestF: DeepestPathPayload = {
  researcher_id: "F",
  path: [{ id: "F", name: "Fábio Ferraz" }],
};

export const searchAlice: SearchPayload = {
  total_matches: 1,
  page: 1,
  page_size: 20,
  results: [
    {
      id: "A",
      name: "Alice Amaral",
      institution: "Universidade de São Paulo",
      width: 2,
      descendancy: 5,
    },
  ],
};

export const searchNone: SearchPayload = {
  total_matches: 0,
  page: 1,
  page_size: 20,
  results: [],
};

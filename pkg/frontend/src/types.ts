// Payload shapes served by the genealogy API (see docs/api.md in the repo root).

export interface TreeNodePayload {
  id: string;
  name: string;
  child_count: number;
  expandable: boolean;
}

export interface TreeEdgePayload {
  supervisor_id: string;
  supervisee_id: string;
  level: "MSC" | "PHD";
  year: number;
}

export interface TreeViewPayload {
  root_id: string;
  nodes: TreeNodePayload[];
  edges: TreeEdgePayload[];
}

export interface AverageValue {
  numerator: number;
  denominator: number;
  display: string;
}

export type TimelinePayload = Record<string, { msc: number; phd: number }>;

export interface MetricsPayload {
  researcher_id: string;
  width: number;
  fecundity: number;
  fertility: number;
  depth: number;
  generations: number;
  descendancy: number;
  genealogical_index: number;
  relationships: number;
  cousins: number;
  avg_supervisions_per_year: AverageValue;
  first_supervision_year: number | null;
  last_supervision_year: number | null;
  deepest_path: string[];
  timeline: TimelinePayload;
}

export interface DegreePayload {
  level: "MSC" | "PHD" | "OTHER";
  year: number;
  thesis: string | null;
  supervisor: string | null;
  institution: string | null;
  areas: string[];
}

export interface DetailPayload {
  id: string;
  name: string;
  citation_names: string[];
  institution: string | null;
  areas: string[];
  degrees: DegreePayload[];
  supervisions_declared: { level: "MSC" | "PHD"; year: number; supervisee: string }[];
  supervision_counts: { msc: number; phd: number; total: number };
  resume: string | null;
}

export interface NamedRef {
  id: string;
  name: string;
}

export interface AncestorsPayload {
  researcher_id: string;
  generations: NamedRef[][];
}

export interface DeepestPathPayload {
  researcher_id: string;
  path: NamedRef[];
}

export interface SearchRowPayload {
  id: string;
  name: string;
  institution: string | null;
  width: number;
  descendancy: number;
}

export interface SearchPayload {
  total_matches: number;
  page: number;
  page_size: number;
  results: SearchRowPayload[];
}

import type {
  AncestorsPayload,
  DeepestPathPayload,
  DetailPayload,
  MetricsPayload,
  SearchPayload,
  TimelinePayload,
  TreeViewPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export interface SearchOptions {
  institution?: string;
  area?: string;
  page?: number;
  pageSize?: number;
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private async get<T>(path: string, params?: Record<string, string>): Promise<T> {
    const url = new URL(this.baseUrl + path, window.location.href);
    for (const [key, value] of Object.entries(params ?? {})) {
      if (value !== "") url.searchParams.set(key, value);
    }
    const response = await fetch(url.toString(), { headers: { Accept: "application/json" } });
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const envelope = body?.error ?? { code: "HTTP_ERROR", message: `status ${response.status}` };
      throw new ApiError(response.status, envelope.code, envelope.message);
    }
    return body as T;
  }

  search(name: string, options: SearchOptions = {}): Promise<SearchPayload> {
    return this.get("/researchers", {
      name,
      institution: options.institution ?? "",
      area: options.area ?? "",
      page: String(options.page ?? 1),
      page_size: String(options.pageSize ?? 20),
    });
  }

  detail(id: string): Promise<DetailPayload> {
    return this.get(`/researchers/${encodeURIComponent(id)}`);
  }

  tree(id: string, expanded: string[]): Promise<TreeViewPayload> {
    return this.get(`/researchers/${encodeURIComponent(id)}/tree`, {
      expanded: expanded.join(","),
    });
  }

  metrics(id: string): Promise<MetricsPayload> {
    return this.get(`/researchers/${encodeURIComponent(id)}/metrics`);
  }

  timeline(id: string): Promise<TimelinePayload> {
    return this.get(`/researchers/${encodeURIComponent(id)}/timeline`);
  }

  ancestors(id: string): Promise<AncestorsPayload> {
    return this.get(`/researchers/${encodeURIComponent(id)}/ancestors`);
  }

  deepestPath(id: string): Promise<DeepestPathPayload> {
    return this.get(`/researchers/${encodeURIComponent(id)}/deepest-path`);
  }
}

/** Base URL resolution: runtime config.json wins, same origin otherwise. */
export async function resolveApiBase(): Promise<string> {
  try {
    const response = await fetch("./config.json");
    if (response.ok) {
      const config = await response.json();
      if (typeof config.apiBase === "string") return config.apiBase.replace(/\/$/, "");
    }
  } catch {
    // no config file served; same-origin API
  }
  return "";
}

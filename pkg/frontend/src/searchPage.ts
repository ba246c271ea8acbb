import type { SearchPayload } from "./types.js";

export interface SearchHandlers {
  onSearch(query: string, institution: string, area: string): void;
  onPick(id: string): void;
}

export interface SearchPageElements {
  form: HTMLFormElement;
  queryInput: HTMLInputElement;
  institutionInput: HTMLInputElement;
  areaInput: HTMLInputElement;
  validation: HTMLElement;
  results: HTMLElement;
}

/**
 * Search box with the institution and area filters laid out in the
 * open, labeled, next to the query field.
 */
export function renderSearchPage(
  container: HTMLElement,
  handlers: SearchHandlers,
  initial: { query: string; institution: string; area: string },
): SearchPageElements {
  container.textContent = "";
  const form = document.createElement("form");
  form.className = "search-form";

  const queryInput = labeledInput(form, "search-query", "Researcher name", initial.query);
  const institutionInput = labeledInput(
    form, "search-institution", "Institution filter", initial.institution,
  );
  const areaInput = labeledInput(form, "search-area", "Knowledge area filter", initial.area);

  const submit = document.createElement("button");
  submit.type = "submit";
  submit.textContent = "Search";
  form.appendChild(submit);

  const validation = document.createElement("p");
  validation.className = "validation";
  validation.setAttribute("role", "alert");

  const results = document.createElement("div");
  results.className = "search-results";

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const query = queryInput.value.trim();
    if (query.length < 2) {
      validation.textContent = "Type at least 2 characters of a researcher name.";
      return;
    }
    validation.textContent = "";
    handlers.onSearch(query, institutionInput.value.trim(), areaInput.value.trim());
  });

  container.append(form, validation, results);
  return { form, queryInput, institutionInput, areaInput, validation, results };
}

export function renderSearchResults(
  elements: SearchPageElements,
  payload: SearchPayload,
  handlers: SearchHandlers,
): void {
  const { results } = elements;
  results.textContent = "";
  if (payload.total_matches === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-notice";
    empty.textContent = "No researchers match this search.";
    results.appendChild(empty);
    return;
  }
  const count = document.createElement("p");
  count.className = "result-count";
  count.textContent = `${payload.total_matches} researcher(s) found`;
  results.appendChild(count);

  const list = document.createElement("ul");
  list.className = "result-list";
  for (const row of payload.results) {
    const item = document.createElement("li");
    const link = document.createElement("button");
    link.type = "button";
    link.className = "result-row";
    link.dataset.id = row.id;
    const name = document.createElement("span");
    name.className = "result-name";
    name.textContent = row.name;
    const meta = document.createElement("span");
    meta.className = "result-meta";
    meta.textContent =
      `${row.institution ?? "—"} · ${row.width} direct, ${row.descendancy} total descendants`;
    link.append(name, meta);
    link.addEventListener("click", () => handlers.onPick(row.id));
    item.appendChild(link);
    list.appendChild(item);
  }
  results.appendChild(list);
}

function labeledInput(
  form: HTMLFormElement,
  id: string,
  labelText: string,
  value: string,
): HTMLInputElement {
  const wrapper = document.createElement("label");
  wrapper.className = "field";
  wrapper.htmlFor = id;
  const caption = document.createElement("span");
  caption.textContent = labelText;
  const input = document.createElement("input");
  input.id = id;
  input.type = "text";
  input.value = value;
  wrapper.append(caption, input);
  form.appendChild(wrapper);
  return input;
}

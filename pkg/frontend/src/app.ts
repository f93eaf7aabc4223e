import { ApiClient, ApiError } from "./api.js";
import { renderChart } from "./chart.js";
import { debounce, type Debounced } from "./debounce.js";
import { renderProvenance } from "./provenance.js";
import type { InterpretResponse, RefineRequest } from "./types.js";

export const REFINE_DEBOUNCE_MS = 150;

// Wires the query box, provenance text, repair controls, and chart into
// one loop over the HTTP API. All interpretation state lives server-side
// in the session; this class only holds the last payload it was sent.
export class App {
  private readonly api: ApiClient;
  private readonly root: HTMLElement;
  private sessionId: string | null = null;
  private payload: InterpretResponse | null = null;
  private numericAttributes: string[] = [];
  private readonly sendRange: Debounced<[string, number, number]>;
  private requestCounter = 0;

  constructor(root: HTMLElement, api: ApiClient) {
    this.root = root;
    this.api = api;
    this.sendRange = debounce((attribute: string, lo: number, hi: number) => {
      void this.refine({ action: "set_range", attribute, lo, hi });
    }, REFINE_DEBOUNCE_MS);
    this.buildShell();
  }

  async start(dataset: string): Promise<void> {
    const created = await this.api.createSession(dataset);
    this.sessionId = created.session_id;
    this.numericAttributes = created.dataset.attributes
      .filter((a) => a.kind === "numeric")
      .map((a) => a.name);
    this.setStatus(`session on '${dataset}' — ask away`);
  }

  async submit(utterance: string): Promise<void> {
    const text = utterance.trim();
    if (text === "") {
      this.setStatus("type a query first, e.g. “which countries are struggling?”");
      return;
    }
    if (this.sessionId === null) {
      this.setStatus("no session yet");
      return;
    }
    await this.track(this.api.interpret(this.sessionId, text));
  }

  async refine(refinement: RefineRequest): Promise<void> {
    if (this.sessionId === null) return;
    await this.track(this.api.refine(this.sessionId, refinement));
  }

  // Last-write-wins: responses that arrive after a newer request was
  // issued are dropped rather than rendered out of order.
  private async track(request: Promise<InterpretResponse>): Promise<void> {
    const ticket = ++this.requestCounter;
    try {
      const payload = await request;
      if (ticket === this.requestCounter) this.render(payload);
    } catch (error) {
      if (ticket !== this.requestCounter) return;
      if (error instanceof ApiError) {
        this.setStatus(`${error.code}: ${error.message}`);
      } else {
        this.setStatus(`request failed: ${String(error)}`);
      }
    }
  }

  private buildShell(): void {
    this.root.innerHTML = "";
    const form = document.createElement("form");
    form.className = "query-form";
    const input = document.createElement("input");
    input.type = "text";
    input.className = "query-input";
    input.placeholder = "which countries are struggling?";
    const button = document.createElement("button");
    button.type = "submit";
    button.textContent = "interpret";
    form.append(input, button);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit(input.value);
    });

    const status = document.createElement("p");
    status.className = "status";
    const provenance = document.createElement("div");
    provenance.className = "provenance-host";
    const controls = document.createElement("div");
    controls.className = "attribute-controls";
    const chart = document.createElement("div");
    chart.className = "chart-host";
    const warnings = document.createElement("ul");
    warnings.className = "warnings";

    this.root.append(form, status, provenance, controls, warnings, chart);
  }

  private part<T extends Element>(selector: string): T {
    const el = this.root.querySelector<T>(selector);
    if (el === null) throw new Error(`missing shell element ${selector}`);
    return el;
  }

  private setStatus(text: string): void {
    this.part<HTMLElement>(".status").textContent = text;
  }

  render(payload: InterpretResponse): void {
    this.payload = payload;
    this.setStatus("");

    const provenanceHost = this.part<HTMLElement>(".provenance-host");
    provenanceHost.innerHTML = "";
    provenanceHost.append(
      renderProvenance(payload.provenance_text, {
        onChange: (attribute, lo, hi) => this.sendRange(attribute, lo, hi),
      }),
    );

    this.renderControls();
    this.renderWarnings();

    const chartHost = this.part<HTMLElement>(".chart-host");
    chartHost.innerHTML = "";
    chartHost.append(renderChart(payload.chart_spec));
  }

  private renderControls(): void {
    const host = this.part<HTMLElement>(".attribute-controls");
    host.innerHTML = "";
    if (this.payload === null) return;
    const active = this.payload.interpretation.active;

    for (const attribute of active) {
      const remove = document.createElement("button");
      remove.type = "button";
      remove.className = "remove-attribute";
      remove.dataset.attribute = attribute;
      remove.textContent = `− ${attribute}`;
      remove.addEventListener("click", () => {
        void this.refine({ action: "remove_attribute", attribute });
      });
      host.append(remove);
    }
    for (const attribute of this.numericAttributes) {
      if (active.includes(attribute)) continue;
      const add = document.createElement("button");
      add.type = "button";
      add.className = "add-attribute";
      add.dataset.attribute = attribute;
      add.textContent = `+ ${attribute}`;
      add.addEventListener("click", () => {
        void this.refine({ action: "add_attribute", attribute });
      });
      host.append(add);
    }
  }

  private renderWarnings(): void {
    const host = this.part<HTMLElement>(".warnings");
    host.innerHTML = "";
    if (this.payload === null) return;
    for (const warning of this.payload.interpretation.warnings) {
      const item = document.createElement("li");
      item.textContent = warning;
      host.append(item);
    }
  }
}

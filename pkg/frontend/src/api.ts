import type {
  ApiErrorPayload,
  DatasetDescriptor,
  InterpretResponse,
  RefineRequest,
  SessionCreateResponse,
} from "./types.js";

// Thrown for any non-2xx response; carries the server's flat error envelope.
export class ApiError extends Error {
  readonly code: ApiErrorPayload["code"];
  readonly detail: string;
  readonly status: number;

  constructor(status: number, payload: ApiErrorPayload) {
    super(payload.message);
    this.name = "ApiError";
    this.status = status;
    this.code = payload.code;
    this.detail = payload.detail;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

// Thin typed wrapper over the HTTP API. No interpretation logic lives
// here: requests go out, payloads come back, errors become ApiError.
export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl = "", fetchImpl: FetchLike = (...args) => fetch(...args)) {
    this.base = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl;
  }

  async uploadDataset(name: string, csv: string): Promise<DatasetDescriptor> {
    return this.request("POST", "/datasets", { name, csv });
  }

  async listDatasets(): Promise<{ datasets: DatasetDescriptor[] }> {
    return this.request("GET", "/datasets");
  }

  async createSession(dataset: string): Promise<SessionCreateResponse> {
    return this.request("POST", "/sessions", { dataset });
  }

  async interpret(sessionId: string, utterance: string): Promise<InterpretResponse> {
    return this.request("POST", `/sessions/${encodeURIComponent(sessionId)}/interpret`, {
      utterance,
    });
  }

  async refine(sessionId: string, refinement: RefineRequest): Promise<InterpretResponse> {
    return this.request(
      "POST",
      `/sessions/${encodeURIComponent(sessionId)}/refine`,
      refinement,
    );
  }

  async getSession(sessionId: string): Promise<unknown> {
    return this.request("GET", `/sessions/${encodeURIComponent(sessionId)}`);
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const response = await this.fetchImpl(`${this.base}${path}`, init);
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload as ApiErrorPayload);
    }
    return payload as T;
  }
}

import type { Analysis, ApiState } from "./types.js";

export type FireOutcome =
  | { ok: true; state: ApiState }
  | { ok: false; status: number; error: string; deficient: string[] };

export type LoadOutcome =
  | { ok: true; state: ApiState }
  | { ok: false; error: string };

/** Everything the UI is allowed to know about the net comes through here. */
export interface ApiClient {
  getState(): Promise<ApiState>;
  getAnalysis(): Promise<Analysis>;
  fire(transition: string): Promise<FireOutcome>;
  undo(): Promise<ApiState>;
  reset(): Promise<ApiState>;
  loadNet(text: string): Promise<LoadOutcome>;
}

export class HttpApi implements ApiClient {
  constructor(private readonly base: string = "") {}

  private async getJson<T>(path: string): Promise<T> {
    const resp = await fetch(this.base + path);
    if (!resp.ok) {
      const body = await resp.json().catch(() => ({ error: resp.statusText }));
      throw new Error(body.error ?? resp.statusText);
    }
    return resp.json() as Promise<T>;
  }

  getState(): Promise<ApiState> {
    return this.getJson("/api/state");
  }

  getAnalysis(): Promise<Analysis> {
    return this.getJson("/api/analysis");
  }

  async fire(transition: string): Promise<FireOutcome> {
    const resp = await fetch(this.base + "/api/fire", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ transition }),
    });
    const body = await resp.json();
    if (resp.ok) {
      return { ok: true, state: body as ApiState };
    }
    return {
      ok: false,
      status: resp.status,
      error: body.error ?? "request failed",
      deficient: body.deficient ?? [],
    };
  }

  private async post(path: string): Promise<ApiState> {
    const resp = await fetch(this.base + path, { method: "POST" });
    if (!resp.ok) {
      const body = await resp.json().catch(() => ({ error: resp.statusText }));
      throw new Error(body.error ?? resp.statusText);
    }
    return resp.json() as Promise<ApiState>;
  }

  undo(): Promise<ApiState> {
    return this.post("/api/undo");
  }

  reset(): Promise<ApiState> {
    return this.post("/api/reset");
  }

  async loadNet(text: string): Promise<LoadOutcome> {
    const resp = await fetch(this.base + "/api/net", { method: "POST", body: text });
    const body = await resp.json();
    if (resp.ok) {
      return { ok: true, state: body as ApiState };
    }
    const where = body.line !== undefined ? ` (line ${body.line})` : "";
    return { ok: false, error: (body.error ?? "bad net description") + where };
  }
}

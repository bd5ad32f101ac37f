import { readFileSync } from "node:fs";

import type { ApiClient, FireOutcome, LoadOutcome } from "../src/api.js";
import type { Analysis, ApiState } from "../src/types.js";

/** Load a recorded backend response from frontend/fixtures. */
export function fixture<T>(name: string): T {
  const url = new URL(`../../fixtures/${name}.json`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

export function recordedStates(): ApiState[] {
  return [0, 1, 2, 3, 4, 5, 6, 7].map((i) => fixture<ApiState>(`state_${i}`));
}

export function recordedAnalysis(): Analysis {
  return fixture<Analysis>("analysis");
}

interface Conflict {
  error: string;
  deficient: string[];
}

/**
 * Replays the recorded session: firing the transition that produced the
 * next recorded state advances, anything else is answered like the
 * recorded 409.
 */
export class FakeApi implements ApiClient {
  readonly calls = { state: 0, analysis: 0, fire: 0, undo: 0, reset: 0, load: 0 };
  private index = 0;
  private readonly states: ApiState[];
  private readonly analysis: Analysis;
  private readonly conflict: Conflict;

  constructor() {
    this.states = recordedStates();
    this.analysis = recordedAnalysis();
    this.conflict = fixture<Conflict>("fire_T2_conflict");
  }

  current(): ApiState {
    return this.states[this.index];
  }

  async getState(): Promise<ApiState> {
    this.calls.state++;
    return this.current();
  }

  async getAnalysis(): Promise<Analysis> {
    this.calls.analysis++;
    return this.analysis;
  }

  async fire(transition: string): Promise<FireOutcome> {
    this.calls.fire++;
    const next = this.states[this.index + 1];
    if (next && next.history[next.history.length - 1] === transition) {
      this.index++;
      return { ok: true, state: next };
    }
    if (transition === "T2" && this.index === 0) {
      return { ok: false, status: 409, ...this.conflict };
    }
    return { ok: false, status: 409, error: `${transition} is not enabled`, deficient: [] };
  }

  async undo(): Promise<ApiState> {
    this.calls.undo++;
    if (this.index > 0) this.index--;
    return this.current();
  }

  async reset(): Promise<ApiState> {
    this.calls.reset++;
    this.index = 0;
    return this.current();
  }

  async loadNet(_text: string): Promise<LoadOutcome> {
    this.calls.load++;
    this.index = 0;
    return { ok: true, state: this.current() };
  }
}

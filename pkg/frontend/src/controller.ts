import type { ApiClient } from "./api.js";
import { invariantRows, type InvariantRow } from "./invariants.js";
import { layeredLayout, type Layout } from "./layout.js";
import { buildScene, type Scene } from "./scene.js";
import type { Analysis, ApiState } from "./types.js";

/**
 * Single-session token game.  All net semantics come from the backend:
 * the controller only forwards actions and mirrors the returned state.
 * One action is in flight at a time; clicks while pending are dropped.
 */
export class TokenGame {
  analysis: Analysis | null = null;
  state: ApiState | null = null;
  layout: Layout | null = null;
  pending = false;
  /** Inline message after a rejected fire (deficient places etc). */
  notice: string | null = null;

  constructor(private readonly api: ApiClient) {}

  async init(): Promise<void> {
    this.analysis = await this.api.getAnalysis();
    this.state = await this.api.getState();
    this.layout = layeredLayout(this.analysis.net);
    this.notice = null;
  }

  get ready(): boolean {
    return this.analysis !== null && this.state !== null;
  }

  isEnabled(transition: string): boolean {
    return this.state !== null && this.state.enabled.includes(transition);
  }

  async clickTransition(transition: string): Promise<void> {
    if (!this.state || this.pending || this.state.deadlocked) return;
    this.pending = true;
    try {
      const outcome = await this.api.fire(transition);
      if (outcome.ok) {
        this.state = outcome.state;
        this.notice = null;
      } else if (outcome.deficient.length > 0) {
        this.notice =
          `${transition} is not enabled: ` +
          `missing tokens on ${outcome.deficient.join(", ")}`;
      } else {
        this.notice = outcome.error;
      }
    } finally {
      this.pending = false;
    }
  }

  async undo(): Promise<void> {
    if (!this.state || this.pending) return;
    this.pending = true;
    try {
      this.state = await this.api.undo();
      this.notice = null;
    } finally {
      this.pending = false;
    }
  }

  async reset(): Promise<void> {
    if (!this.state || this.pending) return;
    this.pending = true;
    try {
      this.state = await this.api.reset();
      this.notice = null;
    } finally {
      this.pending = false;
    }
  }

  async loadNet(text: string): Promise<string | null> {
    if (this.pending) return null;
    this.pending = true;
    try {
      const outcome = await this.api.loadNet(text);
      if (!outcome.ok) return outcome.error;
      await this.init();
      return null;
    } finally {
      this.pending = false;
    }
  }

  scene(): Scene | null {
    if (!this.analysis || !this.state || !this.layout) return null;
    return buildScene(this.analysis.net, this.state, this.layout);
  }

  rows(): InvariantRow[] {
    if (!this.analysis || !this.state) return [];
    return invariantRows(this.analysis, this.state);
  }

  banner(): string | null {
    return this.scene()?.banner ?? null;
  }
}

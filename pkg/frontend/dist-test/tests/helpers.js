import { readFileSync } from "node:fs";
/** Load a recorded backend response from frontend/fixtures. */
export function fixture(name) {
    const url = new URL(`../../fixtures/${name}.json`, import.meta.url);
    return JSON.parse(readFileSync(url, "utf-8"));
}
export function recordedStates() {
    return [0, 1, 2, 3, 4, 5, 6, 7].map((i) => fixture(`state_${i}`));
}
export function recordedAnalysis() {
    return fixture("analysis");
}
/**
 * Replays the recorded session: firing the transition that produced the
 * next recorded state advances, anything else is answered like the
 * recorded 409.
 */
export class FakeApi {
    constructor() {
        this.calls = { state: 0, analysis: 0, fire: 0, undo: 0, reset: 0, load: 0 };
        this.index = 0;
        this.states = recordedStates();
        this.analysis = recordedAnalysis();
        this.conflict = fixture("fire_T2_conflict");
    }
    current() {
        return this.states[this.index];
    }
    async getState() {
        this.calls.state++;
        return this.current();
    }
    async getAnalysis() {
        this.calls.analysis++;
        return this.analysis;
    }
    async fire(transition) {
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
    async undo() {
        this.calls.undo++;
        if (this.index > 0)
            this.index--;
        return this.current();
    }
    async reset() {
        this.calls.reset++;
        this.index = 0;
        return this.current();
    }
    async loadNet(_text) {
        this.calls.load++;
        this.index = 0;
        return { ok: true, state: this.current() };
    }
}

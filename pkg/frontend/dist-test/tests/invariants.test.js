import assert from "node:assert/strict";
import test from "node:test";
import { invariantRows } from "../src/invariants.js";
import { recordedAnalysis, recordedStates } from "./helpers.js";
test("one row per conservation law, all holding at the initial state", () => {
    const analysis = recordedAnalysis();
    const rows = invariantRows(analysis, recordedStates()[0]);
    assert.equal(rows.length, 30);
    for (const row of rows) {
        assert.equal(row.value, 1);
        assert.equal(row.constant, 1);
        assert.ok(row.holds);
    }
});
test("the P10 token line is among the rows", () => {
    const analysis = recordedAnalysis();
    const rows = invariantRows(analysis, recordedStates()[0]);
    const line = rows.find((row) => row.text === "M(P10) + M(P11) + M(P12) = 1");
    assert.ok(line);
    assert.equal(line.value, 1);
});
test("every row holds in every recorded state of the run", () => {
    const analysis = recordedAnalysis();
    for (const state of recordedStates()) {
        for (const row of invariantRows(analysis, state)) {
            assert.ok(row.holds, `${row.text} broken after ${state.history.join(" ")}`);
        }
    }
});
test("a marking violation is flagged, not hidden", () => {
    const analysis = recordedAnalysis();
    const state = structuredClone(recordedStates()[0]);
    state.marking["P10"] = 0; // corrupt the marking on purpose
    const rows = invariantRows(analysis, state);
    const broken = rows.filter((row) => !row.holds);
    assert.ok(broken.length > 0);
    assert.ok(broken.some((row) => row.text.includes("M(P10)")));
});

import assert from "node:assert/strict";
import test from "node:test";
import { layeredLayout } from "../src/layout.js";
import { recordedAnalysis } from "./helpers.js";
test("every node of the recorded net gets a position", () => {
    const net = recordedAnalysis().net;
    const layout = layeredLayout(net);
    assert.equal(layout.positions.size, net.places.length + net.transitions.length);
    assert.ok(layout.width > 0 && layout.height > 0);
});
test("layers follow the flow: arcs always point rightwards", () => {
    const net = recordedAnalysis().net;
    const layout = layeredLayout(net);
    for (const arc of net.arcs) {
        const from = layout.positions.get(arc.source);
        const to = layout.positions.get(arc.target);
        assert.ok(from.x < to.x, `${arc.source} -> ${arc.target} should move right`);
    }
});
test("source places sit in the first column", () => {
    const net = recordedAnalysis().net;
    const layout = layeredLayout(net);
    const targets = new Set(net.arcs.map((arc) => arc.target));
    const sources = net.places.filter((place) => !targets.has(place));
    assert.ok(sources.length > 0);
    for (const place of sources) {
        assert.deepEqual(layout.columns[0].includes(place), true);
    }
});
test("longest-path layering on the recorded net", () => {
    const net = recordedAnalysis().net;
    const layout = layeredLayout(net);
    const column = (id) => layout.columns.findIndex((c) => c.includes(id));
    assert.equal(column("P0"), 0);
    assert.equal(column("T0"), 1);
    assert.equal(column("T2"), 3);
    assert.equal(column("T7"), 7);
    assert.equal(column("P16"), 8);
});
test("cyclic nets terminate with finite layers", () => {
    const net = {
        name: "cycle",
        places: ["a", "b"],
        transitions: ["t1", "t2"],
        arcs: [
            { source: "a", target: "t1", weight: 1 },
            { source: "t1", target: "b", weight: 1 },
            { source: "b", target: "t2", weight: 1 },
            { source: "t2", target: "a", weight: 1 },
        ],
        initialMarking: [1, 0],
    };
    const layout = layeredLayout(net);
    assert.equal(layout.positions.size, 4);
    for (const point of layout.positions.values()) {
        assert.ok(Number.isFinite(point.x) && Number.isFinite(point.y));
    }
});
test("layout is deterministic", () => {
    const net = recordedAnalysis().net;
    assert.deepEqual(layeredLayout(net), layeredLayout(net));
});

export function deadlockBanner(state) {
    return state.deadlocked ? `DEADLOCK after ${state.history.join(" ")}` : null;
}
/** Pure render model: the DOM layer only materializes what is built here. */
export function buildScene(net, state, layout) {
    const enabled = new Set(state.enabled);
    const nodes = [];
    for (const place of net.places) {
        const at = layout.positions.get(place);
        nodes.push({
            id: place,
            kind: "place",
            x: at.x,
            y: at.y,
            tokens: state.marking[place] ?? 0,
            enabled: false,
        });
    }
    for (const transition of net.transitions) {
        const at = layout.positions.get(transition);
        nodes.push({
            id: transition,
            kind: "transition",
            x: at.x,
            y: at.y,
            tokens: 0,
            enabled: enabled.has(transition),
        });
    }
    const edges = net.arcs.map((arc) => ({
        source: arc.source,
        target: arc.target,
        from: layout.positions.get(arc.source),
        to: layout.positions.get(arc.target),
        weight: arc.weight,
    }));
    return {
        nodes,
        edges,
        width: layout.width,
        height: layout.height,
        banner: deadlockBanner(state),
    };
}

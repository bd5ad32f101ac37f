const COLUMN_GAP = 130;
const ROW_GAP = 78;
const MARGIN = 60;
/**
 * Layered left-to-right layout of the bipartite graph.
 *
 * A node's layer is the longest arc path reaching it from any source
 * node, so the drawing follows the process flow.  Relaxation sweeps are
 * capped at the node count, which keeps cyclic nets finite (their layers
 * just saturate).
 */
export function layeredLayout(net) {
    const order = new Map();
    [...net.places, ...net.transitions].forEach((id, i) => order.set(id, i));
    const rank = new Map();
    for (const id of order.keys())
        rank.set(id, 0);
    const cap = Math.max(order.size, 1);
    for (let sweep = 0; sweep < cap; sweep++) {
        let changed = false;
        for (const arc of net.arcs) {
            const source = rank.get(arc.source);
            const target = rank.get(arc.target);
            if (source === undefined || target === undefined)
                continue;
            const lifted = Math.min(source + 1, cap);
            if (lifted > target) {
                rank.set(arc.target, lifted);
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    const maxRank = Math.max(0, ...rank.values());
    const columns = Array.from({ length: maxRank + 1 }, () => []);
    for (const id of order.keys())
        columns[rank.get(id)].push(id);
    for (const column of columns)
        column.sort((a, b) => order.get(a) - order.get(b));
    const tallest = Math.max(1, ...columns.map((c) => c.length));
    const height = 2 * MARGIN + (tallest - 1) * ROW_GAP;
    const positions = new Map();
    columns.forEach((column, c) => {
        const top = MARGIN + ((tallest - column.length) * ROW_GAP) / 2;
        column.forEach((id, r) => {
            positions.set(id, { x: MARGIN + c * COLUMN_GAP, y: top + r * ROW_GAP });
        });
    });
    return {
        positions,
        width: 2 * MARGIN + maxRank * COLUMN_GAP,
        height,
        columns,
    };
}

import type { InvariantRow } from "./invariants.js";
import type { Scene, SceneNode } from "./scene.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const PLACE_RADIUS = 20;
const BOX = 34;

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  return el;
}

function tokenDots(node: SceneNode, group: SVGGElement): void {
  if (node.tokens <= 0) return;
  if (node.tokens > 4) {
    const text = svgEl("text", {
      x: String(node.x),
      y: String(node.y + 5),
      class: "token-count",
      "text-anchor": "middle",
    });
    text.textContent = String(node.tokens);
    group.appendChild(text);
    return;
  }
  const spots: Array<[number, number]> = [
    [0, 0],
    [-7, -7],
    [7, 7],
    [7, -7],
  ].slice(0, node.tokens) as Array<[number, number]>;
  if (node.tokens === 2) {
    spots[0] = [-7, 0];
    spots[1] = [7, 0];
  }
  for (const [dx, dy] of spots) {
    group.appendChild(
      svgEl("circle", {
        cx: String(node.x + dx),
        cy: String(node.y + dy),
        r: "4.5",
        class: "token",
      }),
    );
  }
}

/** Materialize the scene as SVG; clicks on transitions call onFire. */
export function renderScene(
  container: HTMLElement,
  scene: Scene,
  onFire: (transition: string) => void,
): void {
  container.replaceChildren();
  const svg = svgEl("svg", {
    viewBox: `0 0 ${scene.width} ${scene.height}`,
    width: String(scene.width),
    height: String(scene.height),
  });

  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "arrow",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z", class: "arrowhead" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (const edge of scene.edges) {
    const dx = edge.to.x - edge.from.x;
    const dy = edge.to.y - edge.from.y;
    const len = Math.hypot(dx, dy) || 1;
    const trim = PLACE_RADIUS + 6;
    const line = svgEl("line", {
      x1: String(edge.from.x + (dx / len) * trim),
      y1: String(edge.from.y + (dy / len) * trim),
      x2: String(edge.to.x - (dx / len) * trim),
      y2: String(edge.to.y - (dy / len) * trim),
      class: "arc",
      "marker-end": "url(#arrow)",
    });
    svg.appendChild(line);
    if (edge.weight !== 1) {
      const label = svgEl("text", {
        x: String((edge.from.x + edge.to.x) / 2),
        y: String((edge.from.y + edge.to.y) / 2 - 4),
        class: "arc-weight",
        "text-anchor": "middle",
      });
      label.textContent = String(edge.weight);
      svg.appendChild(label);
    }
  }

  for (const node of scene.nodes) {
    const group = svgEl("g", { class: "node" });
    if (node.kind === "place") {
      group.appendChild(
        svgEl("circle", {
          cx: String(node.x),
          cy: String(node.y),
          r: String(PLACE_RADIUS),
          class: "place",
        }),
      );
      tokenDots(node, group);
    } else {
      const rect = svgEl("rect", {
        x: String(node.x - BOX / 2),
        y: String(node.y - BOX / 2),
        width: String(BOX),
        height: String(BOX),
        rx: "4",
        class: node.enabled ? "transition enabled" : "transition",
      });
      if (node.enabled) {
        rect.addEventListener("click", () => onFire(node.id));
      }
      group.appendChild(rect);
    }
    const label = svgEl("text", {
      x: String(node.x),
      y: String(node.y + PLACE_RADIUS + 16),
      class: "node-label",
      "text-anchor": "middle",
    });
    label.textContent = node.id;
    group.appendChild(label);
    svg.appendChild(group);
  }

  container.appendChild(svg);
}

export function renderInvariantPanel(table: HTMLTableElement, rows: InvariantRow[]): void {
  table.replaceChildren();
  const head = table.createTHead().insertRow();
  for (const title of ["conservation law", "value", "holds"]) {
    const cell = document.createElement("th");
    cell.textContent = title;
    head.appendChild(cell);
  }
  const body = table.createTBody();
  for (const row of rows) {
    const tr = body.insertRow();
    tr.className = row.holds ? "holds" : "violated";
    tr.insertCell().textContent = row.text;
    tr.insertCell().textContent = `${row.value}`;
    tr.insertCell().textContent = row.holds ? "yes" : "NO (backend bug)";
  }
}

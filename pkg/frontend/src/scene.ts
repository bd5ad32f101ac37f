import type { Layout, Point } from "./layout.js";
import type { AnalysisNet, ApiState } from "./types.js";

export interface SceneNode {
  id: string;
  kind: "place" | "transition";
  x: number;
  y: number;
  /** Token count for places, 0 for transitions. */
  tokens: number;
  /** True for transitions the current marking enables. */
  enabled: boolean;
}

export interface SceneEdge {
  source: string;
  target: string;
  from: Point;
  to: Point;
  weight: number;
}

export interface Scene {
  nodes: SceneNode[];
  edges: SceneEdge[];
  width: number;
  height: number;
  banner: string | null;
}

export function deadlockBanner(state: ApiState): string | null {
  return state.deadlocked ? `DEADLOCK after ${state.history.join(" ")}` : null;
}

/** Pure render model: the DOM layer only materializes what is built here. */
export function buildScene(net: AnalysisNet, state: ApiState, layout: Layout): Scene {
  const enabled = new Set(state.enabled);
  const nodes: SceneNode[] = [];
  for (const place of net.places) {
    const at = layout.positions.get(place)!;
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
    const at = layout.positions.get(transition)!;
    nodes.push({
      id: transition,
      kind: "transition",
      x: at.x,
      y: at.y,
      tokens: 0,
      enabled: enabled.has(transition),
    });
  }
  const edges: SceneEdge[] = net.arcs.map((arc) => ({
    source: arc.source,
    target: arc.target,
    from: layout.positions.get(arc.source)!,
    to: layout.positions.get(arc.target)!,
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

/** Payload shapes of the backend JSON API (the parts the UI consumes). */

export interface ApiState {
  net: string;
  places: string[];
  marking: Record<string, number>;
  history: string[];
  enabled: string[];
  deadlocked: boolean;
}

export interface NetArc {
  source: string;
  target: string;
  weight: number;
}

export interface AnalysisNet {
  name: string;
  places: string[];
  transitions: string[];
  arcs: NetArc[];
  initialMarking: number[];
}

export interface Equation {
  text: string;
  coeffs: number[];
  constant: number;
}

export interface StateSpaceSummary {
  bounded: boolean;
  safe: boolean;
  deadlockPath: string[] | null;
  deadTransitions: string[] | null;
  stateCount: number | null;
  edgeCount: number | null;
  stateLimitExceeded: boolean;
}

export interface Analysis {
  net: AnalysisNet;
  equations: Equation[];
  coverage: { covered: boolean; uncoveredPlaces: string[] };
  stateSpace: StateSpaceSummary;
}

import type { Analysis, ApiState } from "./types.js";

export interface InvariantRow {
  text: string;
  value: number;
  constant: number;
  holds: boolean;
}

/**
 * One row per conservation equation, with the left-hand side recomputed
 * from the current marking.  A row that does not hold indicates a
 * backend bug, not a user mistake: the analysis guarantees conservation
 * on every reachable marking.
 */
export function invariantRows(analysis: Analysis, state: ApiState): InvariantRow[] {
  const places = analysis.net.places;
  return analysis.equations.map((eq) => {
    let value = 0;
    eq.coeffs.forEach((coeff, i) => {
      value += coeff * (state.marking[places[i]] ?? 0);
    });
    return { text: eq.text, value, constant: eq.constant, holds: value === eq.constant };
  });
}

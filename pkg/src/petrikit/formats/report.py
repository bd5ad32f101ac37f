"""Full-net analysis report: structured results plus JSON and text renderings.

The report content is a pure function of the net and the state cap; only
the timing block varies between runs.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from ..invariants import (
    CoverageReport,
    InvariantEquation,
    Semiflow,
    coverage,
    invariant_equations,
    p_invariants,
    t_invariants,
)
from ..net import IncidenceMatrices, PetriNet, enabled, incidence
from ..statespace import DEFAULT_MAX_STATES, StateSpaceVerdict, state_space_verdict


@dataclass
class AnalysisReport:
    net: PetriNet
    incidence: IncidenceMatrices
    p_flows: list[Semiflow]
    equations: list[InvariantEquation]
    t_flows: list[Semiflow]
    coverage: CoverageReport
    statespace: StateSpaceVerdict
    timings: dict[str, float]


def analyze(
    net: PetriNet,
    max_states: int = DEFAULT_MAX_STATES,
    net_build_ms: float = 0.0,
) -> AnalysisReport:
    """Run every analysis on the net and collect per-phase timings (ms)."""
    t0 = time.perf_counter()
    flows = p_invariants(net)
    equations = invariant_equations(net)
    tflows = t_invariants(net)
    cover = coverage(net)
    t1 = time.perf_counter()
    verdict = state_space_verdict(net, max_states)
    t2 = time.perf_counter()
    invariants_ms = (t1 - t0) * 1000.0
    reachability_ms = (t2 - t1) * 1000.0
    return AnalysisReport(
        net=net,
        incidence=incidence(net),
        p_flows=flows,
        equations=equations,
        t_flows=tflows,
        coverage=cover,
        statespace=verdict,
        timings={
            "netBuild": net_build_ms,
            "invariants": invariants_ms,
            "reachability": reachability_ms,
            "total": net_build_ms + invariants_ms + reachability_ms,
        },
    )


def _flow_json(flow: Semiflow, names) -> dict:
    return {
        "coeffs": list(flow.coeffs),
        "support": [names[i] for i in flow.support],
    }


def report_to_dict(report: AnalysisReport) -> dict:
    """JSON-ready dict with the stable machine interface keys."""
    net = report.net
    ss = report.statespace
    return {
        "net": {
            "name": net.name,
            "places": list(net.places),
            "transitions": list(net.transitions),
            "arcs": [
                {"source": a.source, "target": a.target, "weight": a.weight}
                for a in net.arcs
            ],
            "initialMarking": list(net.initial),
        },
        "incidence": {
            "backward": [list(row) for row in report.incidence.backward],
            "forward": [list(row) for row in report.incidence.forward],
            "combined": [list(row) for row in report.incidence.combined],
        },
        "pInvariants": [_flow_json(f, net.places) for f in report.p_flows],
        "equations": [
            {"text": eq.text(), "coeffs": list(eq.coeffs), "constant": eq.constant}
            for eq in report.equations
        ],
        "tInvariants": [_flow_json(f, net.transitions) for f in report.t_flows],
        "coverage": {
            "covered": report.coverage.covered,
            "uncoveredPlaces": list(report.coverage.uncovered_places),
            "structurallyBounded": report.coverage.structurally_bounded,
            "conservative": report.coverage.covered,
            "weightVector": (
                list(report.coverage.weight_vector)
                if report.coverage.weight_vector is not None
                else None
            ),
        },
        "stateSpace": {
            "bounded": ss.bounded,
            "safe": ss.safe,
            "deadlockPath": list(ss.deadlock_path) if ss.deadlock_path is not None else None,
            "deadTransitions": (
                list(ss.dead_transitions) if ss.dead_transitions is not None else None
            ),
            "stateCount": ss.state_count,
            "edgeCount": ss.edge_count,
            "placeBounds": list(ss.place_bounds) if ss.place_bounds is not None else None,
            "omegaPlaces": list(ss.omega_places),
            "stateLimitExceeded": ss.state_limit_exceeded,
        },
        "timings": {k: round(v, 3) for k, v in report.timings.items()},
    }


def _matrix_text(title: str, rows, places, transitions) -> list[str]:
    width = max([len(t) for t in transitions] + [1]) if transitions else 1
    width = max(width, max((len(str(x)) for row in rows for x in row), default=1))
    name_w = max((len(p) for p in places), default=0)
    out = [title]
    if not places or not transitions:
        out.append("(empty)")
        return out
    out.append(" " * name_w + " " + " ".join(t.rjust(width) for t in transitions))
    for place, row in zip(places, rows):
        out.append(place.ljust(name_w) + " " + " ".join(str(x).rjust(width) for x in row))
    return out


def _marking_text(net: PetriNet, marking) -> str:
    entries = " ".join(f"{p}={m}" for p, m in zip(net.places, marking) if m)
    return entries or "(empty)"


def report_to_text(report: AnalysisReport) -> str:
    net = report.net
    ss = report.statespace
    lines = [
        "Net analysis results",
        "====================",
        f"net {net.name}: {len(net.places)} places, {len(net.transitions)} transitions, "
        f"{len(net.arcs)} arcs",
        "",
        "Invariant analysis",
        "------------------",
        f"P-invariants ({len(report.p_flows)}, minimal support):",
    ]
    for eq in report.equations:
        lines.append(eq.text())
    if not report.equations:
        lines.append("(none)")
    if report.t_flows:
        lines.append(f"T-invariants ({len(report.t_flows)}, minimal support):")
        for flow in report.t_flows:
            terms = " + ".join(
                (t if c == 1 else f"{c}*{t}")
                for t, c in zip(net.transitions, flow.coeffs)
                if c
            )
            lines.append(terms)
    else:
        lines.append("T-invariants: none")
    if report.coverage.covered:
        lines.append("The net is covered by positive P-invariants, it is structurally bounded.")
        lines.append("The net is conservative with respect to the summed invariant weights.")
    else:
        lines.append(
            "The net is not covered by positive P-invariants; uncovered places: "
            + ", ".join(report.coverage.uncovered_places)
        )
    lines += ["", "Incidence and marking", "---------------------"]
    lines += _matrix_text(
        "Forwards incidence matrix I+:", report.incidence.forward, net.places, net.transitions
    )
    lines += _matrix_text(
        "Backwards incidence matrix I-:", report.incidence.backward, net.places, net.transitions
    )
    lines += _matrix_text(
        "Combined incidence matrix I:", report.incidence.combined, net.places, net.transitions
    )
    lines.append("Initial marking: " + _marking_text(net, net.initial))
    lines.append("Enabled transitions: " + (" ".join(enabled(net, net.initial)) or "(none)"))
    lines += ["", "State space analysis", "--------------------"]
    lines.append(f"bounded: {'yes' if ss.bounded else 'no'}")
    if not ss.bounded:
        lines.append("unbounded places: " + " ".join(ss.omega_places))
    lines.append(f"safe: {'yes' if ss.safe else 'no'}")
    if ss.deadlock_path is None:
        if ss.state_limit_exceeded:
            lines.append("shortest path to deadlock: unknown (state limit exceeded)")
        else:
            lines.append("shortest path to deadlock: none (no reachable dead marking)")
    elif not ss.deadlock_path:
        lines.append("shortest path to deadlock: (empty, the initial marking is dead)")
    else:
        lines.append("shortest path to deadlock: " + " ".join(ss.deadlock_path))
    if ss.dead_transitions is None:
        lines.append("dead transitions: unknown (state limit exceeded)")
    else:
        lines.append("dead transitions: " + (" ".join(ss.dead_transitions) or "none"))
    if ss.state_count is not None:
        lines.append(f"states: {ss.state_count}, edges: {ss.edge_count}")
    lines += ["", "Timings", "-------"]
    for phase, key in [
        ("net-build", "netBuild"),
        ("invariants", "invariants"),
        ("reachability", "reachability"),
        ("total", "total"),
    ]:
        lines.append(f"{phase}: {report.timings[key]:.3f} ms")
    return "\n".join(lines) + "\n"


def write_report(report: AnalysisReport, mode: str = "json") -> str:
    """Render a report as a JSON object or paper-style text sections."""
    if mode == "json":
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    if mode == "text":
        return report_to_text(report)
    raise ValueError(f"unknown report mode {mode!r}")

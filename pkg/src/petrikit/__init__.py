"""petrikit: place/transition net analysis toolkit.

Builds nets from a small text DSL or PNML, computes incidence matrices
and minimal-support P/T-invariants, explores the state space for
boundedness, safeness and deadlocks, and exports DOT and JSON reports.
An interactive token game is available through the CLI and a small HTTP
server.
"""

from . import errors
from .data import bakingsoda_net, bakingsoda_text
from .formats import (
    AnalysisReport,
    NetDocument,
    analyze,
    graph_to_dot,
    net_to_dot,
    parse_dsl,
    parse_pnml,
    report_to_dict,
    report_to_text,
    write_dot,
    write_dsl,
    write_pnml,
    write_report,
)
from .invariants import (
    CoverageReport,
    InvariantEquation,
    Semiflow,
    coverage,
    invariant_equations,
    p_invariants,
    t_invariants,
)
from .net import (
    Arc,
    IncidenceMatrices,
    Marking,
    PetriNet,
    build_net,
    enabled,
    fire,
    fire_sequence,
    incidence,
    is_enabled,
)
from .statespace import (
    DEFAULT_MAX_STATES,
    BoundednessVerdict,
    ReachabilityGraph,
    SafenessVerdict,
    StateSpaceVerdict,
    check_bounded,
    check_safe,
    dead_transitions,
    find_deadlock,
    reachability_graph,
    state_space_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Arc",
    "BoundednessVerdict",
    "CoverageReport",
    "DEFAULT_MAX_STATES",
    "IncidenceMatrices",
    "InvariantEquation",
    "Marking",
    "NetDocument",
    "PetriNet",
    "ReachabilityGraph",
    "SafenessVerdict",
    "Semiflow",
    "StateSpaceVerdict",
    "analyze",
    "bakingsoda_net",
    "bakingsoda_text",
    "build_net",
    "check_bounded",
    "check_safe",
    "coverage",
    "dead_transitions",
    "enabled",
    "errors",
    "find_deadlock",
    "fire",
    "fire_sequence",
    "graph_to_dot",
    "incidence",
    "invariant_equations",
    "is_enabled",
    "net_to_dot",
    "p_invariants",
    "parse_dsl",
    "parse_pnml",
    "reachability_graph",
    "report_to_dict",
    "report_to_text",
    "state_space_verdict",
    "t_invariants",
    "write_dot",
    "write_dsl",
    "write_pnml",
    "write_report",
]

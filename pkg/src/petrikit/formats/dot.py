"""Graphviz DOT rendering for nets and reachability graphs.

Output is deterministic: nodes in declaration (or state discovery) order,
arcs in declaration order, weight labels only when the weight is not 1.
"""

from __future__ import annotations

from ..net import PetriNet
from ..statespace import ReachabilityGraph


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def net_to_dot(net: PetriNet) -> str:
    lines = [f"digraph {_quote(net.name)} {{", "  rankdir=LR;"]
    for place, tokens in zip(net.places, net.initial):
        lines.append(f"  {_quote(place)} [shape=circle, label={_quote(f'{place} ({tokens})')}];")
    for transition in net.transitions:
        lines.append(f"  {_quote(transition)} [shape=box];")
    for arc in net.arcs:
        label = f" [label={_quote(str(arc.weight))}]" if arc.weight != 1 else ""
        lines.append(f"  {_quote(arc.source)} -> {_quote(arc.target)}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(graph: ReachabilityGraph, net: PetriNet) -> str:
    """States labeled with their nonzero marking entries, edges with the
    fired transition; dead states are drawn with a double border."""
    lines = [f"digraph {_quote(net.name + ' reachability')} {{", "  rankdir=LR;"]
    for i, marking in enumerate(graph.states):
        entries = " ".join(
            f"{p}={m}" for p, m in zip(net.places, marking) if m
        ) or "(empty)"
        shape = ", peripheries=2" if i in graph.deadlocks else ""
        lines.append(f"  s{i} [shape=ellipse, label={_quote(f's{i}: {entries}')}{shape}];")
    for src, transition, dst in graph.edges:
        lines.append(f"  s{src} -> s{dst} [label={_quote(transition)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(obj, net: PetriNet | None = None) -> str:
    """Render a PetriNet, or a ReachabilityGraph together with its net."""
    if isinstance(obj, PetriNet):
        return net_to_dot(obj)
    if isinstance(obj, ReachabilityGraph):
        if net is None:
            raise TypeError("rendering a reachability graph needs the net for place names")
        return graph_to_dot(obj, net)
    raise TypeError(f"cannot render {type(obj).__name__} as DOT")

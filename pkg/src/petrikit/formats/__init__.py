"""Serialization: DSL and PNML parsing, DOT export, analysis reports."""

from .document import ArcDecl, NetDocument, PlaceDecl, TransitionDecl
from .dot import graph_to_dot, net_to_dot, write_dot
from .dsl import parse_dsl, write_dsl
from .pnml import parse_pnml, write_pnml
from .report import AnalysisReport, analyze, report_to_dict, report_to_text, write_report

__all__ = [
    "AnalysisReport",
    "ArcDecl",
    "NetDocument",
    "PlaceDecl",
    "TransitionDecl",
    "analyze",
    "graph_to_dot",
    "net_to_dot",
    "parse_dsl",
    "parse_pnml",
    "report_to_dict",
    "report_to_text",
    "write_dot",
    "write_dsl",
    "write_pnml",
    "write_report",
]

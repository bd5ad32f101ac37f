"""Reader and writer for the place/transition subset of PNML.

Supported elements: pnml / net / page (optionally nested) / place /
transition / arc, with `initialMarking` text read as tokens and arc
`inscription` text as weight.  `graphics`, `name` labels and
`toolspecific` sections are ignored.  Namespaces are accepted and
stripped, so files from different editors parse alike.
"""

from __future__ import annotations

import xml.parsers.expat
from dataclasses import dataclass, field
from xml.sax.saxutils import quoteattr

from ..errors import DanglingArcRefError, UnsupportedNetTypeError, XmlError
from ..net import PetriNet
from .document import ArcDecl, NetDocument, PlaceDecl, TransitionDecl


@dataclass
class _Element:
    tag: str
    attrs: dict
    line: int
    column: int
    children: list = field(default_factory=list)
    text: str = ""

    def find(self, tag: str):
        return next((c for c in self.children if c.tag == tag), None)

    def all(self, tag: str):
        return [c for c in self.children if c.tag == tag]


def _local(tag: str) -> str:
    return tag.rsplit(":", 1)[-1]


def _parse_xml(text: str) -> _Element:
    parser = xml.parsers.expat.ParserCreate()
    root: list[_Element] = []
    stack: list[_Element] = []

    def start(tag, attrs):
        node = _Element(
            _local(tag),
            {_local(k): v for k, v in attrs.items()},
            parser.CurrentLineNumber,
            parser.CurrentColumnNumber + 1,
        )
        if stack:
            stack[-1].children.append(node)
        else:
            root.append(node)
        stack.append(node)

    def end(_tag):
        stack.pop()

    def chars(data):
        if stack:
            stack[-1].text += data

    parser.StartElementHandler = start
    parser.EndElementHandler = end
    parser.CharacterDataHandler = chars
    try:
        parser.Parse(text, True)
    except xml.parsers.expat.ExpatError as err:
        raise XmlError(
            xml.parsers.expat.errors.messages[err.code], err.lineno, err.offset + 1
        ) from err
    if not root:
        raise XmlError("empty document", 1, 1)
    return root[0]


def _label_number(element: _Element, label: str, default: int) -> int:
    child = element.find(label)
    if child is None:
        return default
    text_node = child.find("text")
    raw = (text_node.text if text_node is not None else child.text).strip()
    try:
        return int(raw)
    except ValueError:
        raise XmlError(f"malformed {label} value {raw!r}", child.line, child.column) from None


def parse_pnml(text: str) -> NetDocument:
    """Parse a PNML document into a NetDocument (first net element wins)."""
    root = _parse_xml(text)
    if root.tag == "pnml":
        nets = root.all("net")
        if not nets:
            raise XmlError("pnml document contains no net", root.line, root.column)
        net = nets[0]
    elif root.tag == "net":
        net = root
    else:
        raise XmlError(f"expected pnml or net root, got {root.tag!r}", root.line, root.column)

    net_type = net.attrs.get("type", "")
    if net_type and "ptnet" not in net_type.lower() and "p/t" not in net_type.lower():
        raise UnsupportedNetTypeError(
            f"unsupported net type {net_type!r} (only place/transition nets)",
            net.line,
            net.column,
        )

    doc = NetDocument(name=net.attrs.get("id", "net"))

    def require_id(element: _Element) -> str:
        ident = element.attrs.get("id")
        if not ident:
            raise XmlError(f"{element.tag} without id", element.line, element.column)
        return ident

    def walk(scope: _Element):
        for child in scope.children:
            if child.tag == "place":
                doc.places.append(
                    PlaceDecl(
                        require_id(child),
                        _label_number(child, "initialMarking", 0),
                        child.line,
                        child.column,
                    )
                )
            elif child.tag == "transition":
                doc.transitions.append(TransitionDecl(require_id(child), child.line, child.column))
            elif child.tag == "arc":
                source = child.attrs.get("source")
                target = child.attrs.get("target")
                if not source or not target:
                    raise XmlError("arc without source/target", child.line, child.column)
                doc.arcs.append(
                    ArcDecl(
                        source,
                        target,
                        _label_number(child, "inscription", 1),
                        child.line,
                        child.column,
                    )
                )
            elif child.tag == "page":
                walk(child)

    walk(net)

    declared = {p.name for p in doc.places} | {t.name for t in doc.transitions}
    for arc in doc.arcs:
        for endpoint in (arc.source, arc.target):
            if endpoint not in declared:
                raise DanglingArcRefError(
                    f"arc references unknown node {endpoint!r}", arc.line, arc.column
                )
    return doc


def write_pnml(net: PetriNet) -> str:
    """PNML text for a net; parse_pnml followed by build inverts it."""
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<pnml xmlns="http://www.pnml.org/version-2009/grammar/pnml">',
        f'  <net id={quoteattr(net.name)} type="http://www.pnml.org/version-2009/grammar/ptnet">',
        '    <page id="page0">',
    ]
    for place, tokens in zip(net.places, net.initial):
        if tokens:
            out.append(f"      <place id={quoteattr(place)}>")
            out.append(f"        <initialMarking><text>{tokens}</text></initialMarking>")
            out.append("      </place>")
        else:
            out.append(f"      <place id={quoteattr(place)}/>")
    for transition in net.transitions:
        out.append(f"      <transition id={quoteattr(transition)}/>")
    for n, arc in enumerate(net.arcs):
        head = (
            f'      <arc id="a{n}" source={quoteattr(arc.source)} '
            f"target={quoteattr(arc.target)}"
        )
        if arc.weight != 1:
            out.append(head + ">")
            out.append(f"        <inscription><text>{arc.weight}</text></inscription>")
            out.append("      </arc>")
        else:
            out.append(head + "/>")
    out.extend(["    </page>", "  </net>", "</pnml>"])
    return "\n".join(out) + "\n"

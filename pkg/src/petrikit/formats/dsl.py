"""Line-oriented net description language.

One directive per line, `#` starts a comment, blank lines are ignored:

    net <name>
    place <id> [tokens <n>]
    trans <id>
    arc <src> -> <dst> [weight <n>]

Defaults: tokens 0, weight 1.  Ids match [A-Za-z_][A-Za-z0-9_]*.
"""

from __future__ import annotations

import re

from ..errors import MalformedNumberError, ParseError, UnknownDirectiveError
from ..net import PetriNet
from .document import ArcDecl, NetDocument, PlaceDecl, TransitionDecl

_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_TOKEN = re.compile(r"\S+")


def _tokenize(line: str):
    """(text, column) pairs for the non-comment part of a line."""
    code = line.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(code)]


class _Line:
    def __init__(self, tokens, lineno: int, raw: str):
        self.tokens = tokens
        self.lineno = lineno
        self.raw = raw
        self.pos = 0

    def take(self, what: str) -> tuple[str, int]:
        if self.pos >= len(self.tokens):
            column = len(self.raw.split("#", 1)[0].rstrip()) + 1
            raise ParseError(f"expected {what}", self.lineno, column)
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def take_id(self, what: str) -> tuple[str, int]:
        text, column = self.take(what)
        if not _ID.match(text):
            raise ParseError(f"invalid {what} {text!r}", self.lineno, column)
        return text, column

    def take_number(self, what: str) -> int:
        text, column = self.take(what)
        if not text.isdigit():
            raise MalformedNumberError(f"malformed {what} {text!r}", self.lineno, column)
        return int(text)

    def take_keyword(self, keyword: str) -> None:
        text, column = self.take(f"{keyword!r}")
        if text != keyword:
            raise ParseError(f"expected {keyword!r}, got {text!r}", self.lineno, column)

    def maybe(self, keyword: str) -> bool:
        if self.pos < len(self.tokens) and self.tokens[self.pos][0] == keyword:
            self.pos += 1
            return True
        return False

    def done(self) -> None:
        if self.pos < len(self.tokens):
            text, column = self.tokens[self.pos]
            raise ParseError(f"unexpected trailing {text!r}", self.lineno, column)


def parse_dsl(text: str) -> NetDocument:
    """Parse DSL text into a NetDocument (validation happens in .build())."""
    doc = NetDocument()
    named = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        line = _Line(tokens, lineno, raw)
        directive, column = line.take("directive")
        if directive == "net":
            if named:
                raise ParseError("duplicate net directive", lineno, column)
            doc.name, _ = line.take_id("net name")
            named = True
        elif directive == "place":
            name, col = line.take_id("place id")
            tokens_count = line.take_number("token count") if line.maybe("tokens") else 0
            doc.places.append(PlaceDecl(name, tokens_count, lineno, col))
        elif directive == "trans":
            name, col = line.take_id("transition id")
            doc.transitions.append(TransitionDecl(name, lineno, col))
        elif directive == "arc":
            src, col = line.take_id("arc source")
            line.take_keyword("->")
            dst, _ = line.take_id("arc target")
            weight = line.take_number("weight") if line.maybe("weight") else 1
            doc.arcs.append(ArcDecl(src, dst, weight, lineno, col))
        else:
            raise UnknownDirectiveError(f"unknown directive {directive!r}", lineno, column)
        line.done()
    return doc


def write_dsl(net: PetriNet) -> str:
    """Canonical DSL text for a net; parse_dsl inverts it exactly."""
    if not _ID.match(net.name):
        raise ValueError(f"net name {net.name!r} is not expressible in the DSL")
    lines = [f"net {net.name}"]
    for place, tokens in zip(net.places, net.initial):
        lines.append(f"place {place} tokens {tokens}" if tokens else f"place {place}")
    for transition in net.transitions:
        lines.append(f"trans {transition}")
    for arc in net.arcs:
        suffix = f" weight {arc.weight}" if arc.weight != 1 else ""
        lines.append(f"arc {arc.source} -> {arc.target}{suffix}")
    return "\n".join(lines) + "\n"

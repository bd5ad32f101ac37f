"""Exception hierarchy for net construction, firing, exploration, and parsing."""

from __future__ import annotations


class PetrikitError(Exception):
    """Base class for all toolkit errors."""


class NetConstructionError(PetrikitError):
    """A net description violates a structural invariant."""


class DuplicateIdError(NetConstructionError):
    def __init__(self, name: str):
        super().__init__(f"duplicate id {name!r}")
        self.name = name


class UnknownEndpointError(NetConstructionError):
    def __init__(self, source: str, target: str, missing: str):
        super().__init__(f"arc {source} -> {target} names undeclared node {missing!r}")
        self.source = source
        self.target = target
        self.missing = missing


class NonBipartiteArcError(NetConstructionError):
    def __init__(self, source: str, target: str, kind: str):
        super().__init__(f"arc {source} -> {target} connects two {kind}s")
        self.source = source
        self.target = target
        self.kind = kind


class DuplicateArcError(NetConstructionError):
    def __init__(self, source: str, target: str):
        super().__init__(f"duplicate arc {source} -> {target}")
        self.source = source
        self.target = target


class ZeroWeightError(NetConstructionError):
    def __init__(self, source: str, target: str, weight: int):
        super().__init__(f"arc {source} -> {target} has non-positive weight {weight}")
        self.source = source
        self.target = target
        self.weight = weight


class NegativeTokensError(NetConstructionError):
    def __init__(self, place: str, tokens: int):
        super().__init__(f"place {place!r} has negative token count {tokens}")
        self.place = place
        self.tokens = tokens


class MarkingSizeMismatchError(PetrikitError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"marking has {got} entries, net has {expected} places")
        self.expected = expected
        self.got = got


class UnknownTransitionError(PetrikitError):
    def __init__(self, name: str):
        super().__init__(f"unknown transition {name!r}")
        self.name = name


class UnknownPlaceError(PetrikitError):
    def __init__(self, name: str):
        super().__init__(f"unknown place {name!r}")
        self.name = name


class NotEnabledError(PetrikitError):
    """Firing was attempted on a disabled transition.

    `deficient` lists the input places short of tokens, in declaration
    order.  `position` is set when the failure occurred inside a sequence.
    """

    def __init__(self, transition: str, deficient: tuple[str, ...], position: int | None = None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(
            f"transition {transition} not enabled{where}: "
            f"insufficient tokens on {', '.join(deficient)}"
        )
        self.transition = transition
        self.deficient = deficient
        self.position = position


class StateLimitExceededError(PetrikitError):
    """Exploration hit the state cap; the net may be unbounded or just large.

    `count` is the number of states stored before giving up; `partial`
    holds the truncated graph when the caller built one.
    """

    def __init__(self, count: int, partial=None):
        super().__init__(f"state limit exceeded after {count} states")
        self.count = count
        self.partial = partial


class TruncatedGraphError(PetrikitError):
    def __init__(self):
        super().__init__("reachability graph is truncated; analysis needs a full graph")


class ParseError(PetrikitError):
    """Syntax error in a net file; always carries a source location."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownDirectiveError(ParseError):
    pass


class MalformedNumberError(ParseError):
    pass


class XmlError(ParseError):
    pass


class UnsupportedNetTypeError(ParseError):
    pass


class DanglingArcRefError(ParseError):
    pass

"""Position-annotated net documents: what parsers produce before validation."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import (
    DuplicateArcError,
    DuplicateIdError,
    NegativeTokensError,
    NetConstructionError,
    NonBipartiteArcError,
    UnknownEndpointError,
    ZeroWeightError,
)
from ..net import PetriNet, build_net


@dataclass(frozen=True)
class PlaceDecl:
    name: str
    tokens: int
    line: int
    column: int


@dataclass(frozen=True)
class TransitionDecl:
    name: str
    line: int
    column: int


@dataclass(frozen=True)
class ArcDecl:
    source: str
    target: str
    weight: int
    line: int
    column: int


@dataclass
class NetDocument:
    """Parsed net description; `build` validates it into a PetriNet.

    Construction errors are re-raised with the source location of the
    offending declaration attached (`line`/`column` attributes).
    """

    name: str = "net"
    places: list[PlaceDecl] = field(default_factory=list)
    transitions: list[TransitionDecl] = field(default_factory=list)
    arcs: list[ArcDecl] = field(default_factory=list)

    def build(self) -> PetriNet:
        try:
            return build_net(
                name=self.name,
                places=[(p.name, p.tokens) for p in self.places],
                transitions=[t.name for t in self.transitions],
                arcs=[(a.source, a.target, a.weight) for a in self.arcs],
            )
        except NetConstructionError as err:
            loc = self._locate(err)
            if loc is not None:
                err.line, err.column = loc.line, loc.column
            raise

    def _locate(self, err):
        if isinstance(err, DuplicateIdError):
            hits = [d for d in [*self.places, *self.transitions] if d.name == err.name]
            return hits[1] if len(hits) > 1 else (hits[0] if hits else None)
        if isinstance(err, NegativeTokensError):
            return next((p for p in self.places if p.name == err.place), None)
        if isinstance(
            err,
            (UnknownEndpointError, NonBipartiteArcError, DuplicateArcError, ZeroWeightError),
        ):
            hits = [
                a for a in self.arcs if a.source == err.source and a.target == err.target
            ]
            if isinstance(err, DuplicateArcError) and len(hits) > 1:
                return hits[1]
            return hits[0] if hits else None
        return None

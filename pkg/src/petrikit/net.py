"""Place/transition net data model and token-game semantics.

A `PetriNet` is immutable after construction and safe to share between
threads; markings are plain tuples of non-negative ints in place
declaration order, and every operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DuplicateArcError,
    DuplicateIdError,
    MarkingSizeMismatchError,
    NegativeTokensError,
    NonBipartiteArcError,
    NotEnabledError,
    UnknownEndpointError,
    UnknownTransitionError,
    ZeroWeightError,
)

Marking = tuple[int, ...]


@dataclass(frozen=True)
class Arc:
    """Directed arc between a place and a transition (either direction)."""

    source: str
    target: str
    weight: int = 1


@dataclass(frozen=True)
class IncidenceMatrices:
    """Consumption (backward), production (forward) and their difference.

    Rows follow place declaration order, columns transition declaration
    order; combined[p][t] == forward[p][t] - backward[p][t].
    """

    backward: tuple[tuple[int, ...], ...]
    forward: tuple[tuple[int, ...], ...]
    combined: tuple[tuple[int, ...], ...]


def _check_token(name: str, kind: str) -> None:
    if not isinstance(name, str) or not name or any(c.isspace() for c in name):
        raise ValueError(f"{kind} id must be a nonempty token without whitespace, got {name!r}")


@dataclass(frozen=True)
class PetriNet:
    """Validated immutable net. Build instances with `build_net`."""

    name: str
    places: tuple[str, ...]
    transitions: tuple[str, ...]
    arcs: tuple[Arc, ...]
    initial: Marking
    # Derived lookup tables, excluded from equality.
    place_index: dict = field(compare=False, repr=False, default_factory=dict)
    transition_index: dict = field(compare=False, repr=False, default_factory=dict)
    # Per transition: tuple of (place index, weight) pairs.
    pre: tuple = field(compare=False, repr=False, default=())
    post: tuple = field(compare=False, repr=False, default=())

    def marking_dict(self, marking: Marking) -> dict[str, int]:
        """Name-keyed view of a marking, in declaration order."""
        check_marking(self, marking)
        return dict(zip(self.places, marking))


def build_net(name="net", places=(), transitions=(), arcs=()) -> PetriNet:
    """Validate a structured net description and freeze it.

    places: iterable of place names or (name, initial tokens) pairs.
    transitions: iterable of transition names.
    arcs: iterable of Arc, (source, target) or (source, target, weight).

    Raises DuplicateIdError, UnknownEndpointError, NonBipartiteArcError,
    DuplicateArcError, ZeroWeightError or NegativeTokensError when the
    description breaks an invariant.
    """
    place_names: list[str] = []
    tokens: list[int] = []
    for entry in places:
        if isinstance(entry, str):
            pname, count = entry, 0
        else:
            pname, count = entry
        _check_token(pname, "place")
        place_names.append(pname)
        tokens.append(int(count))

    transition_names = list(transitions)
    for tname in transition_names:
        _check_token(tname, "transition")

    seen: set[str] = set()
    for node in place_names + transition_names:
        if node in seen:
            raise DuplicateIdError(node)
        seen.add(node)

    place_index = {p: i for i, p in enumerate(place_names)}
    transition_index = {t: i for i, t in enumerate(transition_names)}

    normalized: list[Arc] = []
    pairs: set[tuple[str, str]] = set()
    pre: list[list[tuple[int, int]]] = [[] for _ in transition_names]
    post: list[list[tuple[int, int]]] = [[] for _ in transition_names]
    for entry in arcs:
        arc = entry if isinstance(entry, Arc) else Arc(*entry)
        src_is_place = arc.source in place_index
        dst_is_place = arc.target in place_index
        src_is_trans = arc.source in transition_index
        dst_is_trans = arc.target in transition_index
        if not (src_is_place or src_is_trans):
            raise UnknownEndpointError(arc.source, arc.target, arc.source)
        if not (dst_is_place or dst_is_trans):
            raise UnknownEndpointError(arc.source, arc.target, arc.target)
        if src_is_place == dst_is_place:
            raise NonBipartiteArcError(arc.source, arc.target, "place" if src_is_place else "transition")
        if arc.weight < 1:
            raise ZeroWeightError(arc.source, arc.target, arc.weight)
        if (arc.source, arc.target) in pairs:
            raise DuplicateArcError(arc.source, arc.target)
        pairs.add((arc.source, arc.target))
        normalized.append(arc)
        if src_is_place:
            pre[transition_index[arc.target]].append((place_index[arc.source], arc.weight))
        else:
            post[transition_index[arc.source]].append((place_index[arc.target], arc.weight))

    for pname, count in zip(place_names, tokens):
        if count < 0:
            raise NegativeTokensError(pname, count)

    return PetriNet(
        name=name,
        places=tuple(place_names),
        transitions=tuple(transition_names),
        arcs=tuple(normalized),
        initial=tuple(tokens),
        place_index=place_index,
        transition_index=transition_index,
        pre=tuple(tuple(sorted(entries)) for entries in pre),
        post=tuple(tuple(sorted(entries)) for entries in post),
    )


def check_marking(net: PetriNet, marking: Marking) -> None:
    if len(marking) != len(net.places):
        raise MarkingSizeMismatchError(len(net.places), len(marking))


def incidence(net: PetriNet) -> IncidenceMatrices:
    """Backward, forward and combined incidence matrices of the net."""
    n, m = len(net.places), len(net.transitions)
    backward = [[0] * m for _ in range(n)]
    forward = [[0] * m for _ in range(n)]
    for j in range(m):
        for p, w in net.pre[j]:
            backward[p][j] = w
        for p, w in net.post[j]:
            forward[p][j] = w
    combined = [[forward[p][j] - backward[p][j] for j in range(m)] for p in range(n)]
    freeze = lambda rows: tuple(tuple(row) for row in rows)
    return IncidenceMatrices(freeze(backward), freeze(forward), freeze(combined))


def _deficient(net: PetriNet, marking: Marking, t: int) -> tuple[str, ...]:
    return tuple(net.places[p] for p, w in net.pre[t] if marking[p] < w)


def enabled(net: PetriNet, marking: Marking) -> tuple[str, ...]:
    """Transitions firable at `marking`, in declaration order.

    A transition with an empty preset is always enabled.
    """
    check_marking(net, marking)
    return tuple(
        t
        for j, t in enumerate(net.transitions)
        if all(marking[p] >= w for p, w in net.pre[j])
    )


def is_enabled(net: PetriNet, marking: Marking, transition: str) -> bool:
    check_marking(net, marking)
    j = net.transition_index.get(transition)
    if j is None:
        raise UnknownTransitionError(transition)
    return all(marking[p] >= w for p, w in net.pre[j])


def fire(net: PetriNet, marking: Marking, transition: str, _position: int | None = None) -> Marking:
    """Fire one enabled transition: consume the preset, produce the postset.

    Raises NotEnabledError (listing the deficient places) or
    UnknownTransitionError.
    """
    check_marking(net, marking)
    j = net.transition_index.get(transition)
    if j is None:
        raise UnknownTransitionError(transition)
    deficient = _deficient(net, marking, j)
    if deficient:
        raise NotEnabledError(transition, deficient, _position)
    out = list(marking)
    for p, w in net.pre[j]:
        out[p] -= w
    for p, w in net.post[j]:
        out[p] += w
    return tuple(out)


def fire_sequence(net: PetriNet, marking: Marking, sequence) -> Marking:
    """Left fold of `fire` over the sequence; NotEnabledError carries the
    position of the first transition that failed."""
    current = marking
    for i, t in enumerate(sequence):
        current = fire(net, current, t, _position=i)
    return current

"""Reachability graph construction and behavioural verdicts.

Exploration is breadth-first from the initial marking, trying transitions
in declaration order inside each state, so graphs, verdicts and paths are
deterministic.  Boundedness is decided exactly with a coverability tree
(omega acceleration against ancestors); the tree is always finite, so
`check_bounded` needs no state cap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import StateLimitExceededError, TruncatedGraphError
from .net import Marking, PetriNet, check_marking, enabled

DEFAULT_MAX_STATES = 1_000_000

_OMEGA = float("inf")


@dataclass(frozen=True)
class ReachabilityGraph:
    """Explored markings (state 0 = initial) plus transition-labeled edges.

    `deadlocks` holds the indices of states that enable no transition.
    `complete` is False only on the partial graph carried by a
    StateLimitExceededError.
    """

    states: tuple[Marking, ...]
    edges: tuple[tuple[int, str, int], ...]
    deadlocks: frozenset[int]
    complete: bool = True


@dataclass(frozen=True)
class BoundednessVerdict:
    bounded: bool
    # Max tokens seen per place (exact) when bounded, else None.
    place_bounds: tuple[int, ...] | None
    # Places that can grow without bound (the omega witness), empty when bounded.
    omega_places: tuple[str, ...]


@dataclass(frozen=True)
class SafenessVerdict:
    safe: bool
    bounded: bool
    # Places whose token count can exceed one (or grow without bound).
    violations: tuple[str, ...]


@dataclass(frozen=True)
class StateSpaceVerdict:
    """Combined behavioural summary; None fields were not decidable within
    the state cap."""

    bounded: bool
    place_bounds: tuple[int, ...] | None
    safe: bool
    deadlock_path: tuple[str, ...] | None
    dead_transitions: tuple[str, ...] | None
    state_count: int | None
    edge_count: int | None
    state_limit_exceeded: bool = False
    omega_places: tuple[str, ...] = ()


def _explore(net: PetriNet, start: Marking, max_states: int):
    """Shared BFS core: returns (states, edges, dead, parents, truncated)."""
    states: list[Marking] = [start]
    index: dict[Marking, int] = {start: 0}
    parents: list[tuple[int, str] | None] = [None]
    edges: list[tuple[int, str, int]] = []
    dead: list[int] = []
    truncated = False
    queue = deque([0])
    while queue:
        i = queue.popleft()
        marking = states[i]
        fired = False
        for j, t in enumerate(net.transitions):
            if not all(marking[p] >= w for p, w in net.pre[j]):
                continue
            fired = True
            successor = list(marking)
            for p, w in net.pre[j]:
                successor[p] -= w
            for p, w in net.post[j]:
                successor[p] += w
            successor = tuple(successor)
            k = index.get(successor)
            if k is None:
                if len(states) >= max_states:
                    truncated = True
                    return states, edges, dead, parents, truncated
                k = len(states)
                index[successor] = k
                states.append(successor)
                parents.append((i, t))
                queue.append(k)
            edges.append((i, t, k))
        if not fired:
            dead.append(i)
    return states, edges, dead, parents, truncated


def reachability_graph(net: PetriNet, max_states: int = DEFAULT_MAX_STATES) -> ReachabilityGraph:
    """Breadth-first reachability graph from the initial marking.

    Raises StateLimitExceededError when more than `max_states` distinct
    markings exist; the exception carries the partial graph.
    """
    if max_states < 1:
        raise ValueError("max_states must be >= 1")
    states, edges, dead, _, truncated = _explore(net, net.initial, max_states)
    graph = ReachabilityGraph(
        states=tuple(states),
        edges=tuple(edges),
        deadlocks=frozenset(dead),
        complete=not truncated,
    )
    if truncated:
        raise StateLimitExceededError(len(states), partial=graph)
    return graph


def find_deadlock(net: PetriNet, max_states: int = DEFAULT_MAX_STATES) -> tuple[str, ...] | None:
    """Shortest firing sequence reaching a dead marking, None if there is none.

    Breadth-first layers plus declaration-order tie-breaking make the
    result unique.  A net without transitions never counts as deadlocked.
    Raises StateLimitExceededError when the cap is hit before any dead
    marking is found (status unknown).
    """
    if max_states < 1:
        raise ValueError("max_states must be >= 1")
    if not net.transitions:
        return None
    states: list[Marking] = [net.initial]
    index = {net.initial: 0}
    parents: list[tuple[int, str] | None] = [None]

    def path_to(i: int) -> tuple[str, ...]:
        path: list[str] = []
        while parents[i] is not None:
            i, t = parents[i]
            path.append(t)
        return tuple(reversed(path))

    if not enabled(net, net.initial):
        return ()
    queue = deque([0])
    while queue:
        i = queue.popleft()
        marking = states[i]
        for j, t in enumerate(net.transitions):
            if not all(marking[p] >= w for p, w in net.pre[j]):
                continue
            successor = list(marking)
            for p, w in net.pre[j]:
                successor[p] -= w
            for p, w in net.post[j]:
                successor[p] += w
            successor = tuple(successor)
            if successor in index:
                continue
            if len(states) >= max_states:
                raise StateLimitExceededError(len(states))
            k = len(states)
            index[successor] = k
            states.append(successor)
            parents.append((i, t))
            if not enabled(net, successor):
                return path_to(k)
            queue.append(k)
    return None


def check_bounded(net: PetriNet) -> BoundednessVerdict:
    """Exact boundedness via coverability with omega acceleration.

    A successor that strictly dominates an ancestor on its own path gets
    omega on the strictly greater components; the net is bounded iff no
    omega ever appears.  Nodes repeating an already-seen label are not
    re-expanded (their subtrees would be identical), which keeps the tree
    small without affecting the verdict.
    """
    start = net.initial
    labels = [start]
    parent = [-1]
    seen = {start}
    queue = deque([0])
    has_omega = False
    while queue:
        i = queue.popleft()
        marking = labels[i]
        for j, _t in enumerate(net.transitions):
            if not all(marking[p] >= w for p, w in net.pre[j]):
                continue
            successor = list(marking)
            for p, w in net.pre[j]:
                successor[p] -= w
            for p, w in net.post[j]:
                successor[p] += w
            # Accelerate against every ancestor the successor strictly dominates.
            ancestor = i
            while ancestor != -1:
                anc = labels[ancestor]
                if anc != tuple(successor) and all(a <= b for a, b in zip(anc, successor)):
                    for p in range(len(successor)):
                        if anc[p] < successor[p]:
                            successor[p] = _OMEGA
                ancestor = parent[ancestor]
            successor = tuple(successor)
            if successor in seen:
                continue
            if any(x == _OMEGA for x in successor):
                has_omega = True
            seen.add(successor)
            labels.append(successor)
            parent.append(i)
            queue.append(len(labels) - 1)

    if has_omega:
        omega = tuple(
            p
            for k, p in enumerate(net.places)
            if any(label[k] == _OMEGA for label in labels)
        )
        return BoundednessVerdict(bounded=False, place_bounds=None, omega_places=omega)
    # No acceleration fired, so the explored labels are exactly the
    # reachable markings; per-place maxima are the exact bounds.
    bounds = tuple(max(label[k] for label in labels) for k in range(len(net.places)))
    return BoundednessVerdict(bounded=True, place_bounds=bounds if net.places else (), omega_places=())


def check_safe(net: PetriNet) -> SafenessVerdict:
    """Safe iff every place holds at most one token in every reachable marking."""
    boundedness = check_bounded(net)
    if not boundedness.bounded:
        return SafenessVerdict(safe=False, bounded=False, violations=boundedness.omega_places)
    violations = tuple(
        p for p, b in zip(net.places, boundedness.place_bounds) if b > 1
    )
    return SafenessVerdict(safe=not violations, bounded=True, violations=violations)


def dead_transitions(graph: ReachabilityGraph, net: PetriNet) -> tuple[str, ...]:
    """Transitions labeling no edge anywhere in a fully explored graph."""
    if not graph.complete:
        raise TruncatedGraphError()
    fired = {t for _, t, _ in graph.edges}
    return tuple(t for t in net.transitions if t not in fired)


def state_space_verdict(net: PetriNet, max_states: int = DEFAULT_MAX_STATES) -> StateSpaceVerdict:
    """Run boundedness, safeness, deadlock and dead-transition analysis.

    Verdicts that need the full reachability graph degrade to None when
    the state cap cuts exploration short; boundedness itself is always
    exact (coverability does not depend on the cap).
    """
    boundedness = check_bounded(net)
    omega = boundedness.omega_places
    deadlock_path: tuple[str, ...] | None = None
    deadlock_known = True
    try:
        deadlock_path = find_deadlock(net, max_states)
    except StateLimitExceededError:
        deadlock_known = False

    graph: ReachabilityGraph | None = None
    limit_exceeded = not deadlock_known
    if boundedness.bounded:
        try:
            graph = reachability_graph(net, max_states)
        except StateLimitExceededError:
            limit_exceeded = True

    if graph is not None:
        safe = all(b <= 1 for b in boundedness.place_bounds)
        return StateSpaceVerdict(
            bounded=True,
            place_bounds=boundedness.place_bounds,
            safe=safe,
            deadlock_path=deadlock_path,
            dead_transitions=dead_transitions(graph, net),
            state_count=len(graph.states),
            edge_count=len(graph.edges),
            state_limit_exceeded=limit_exceeded,
            omega_places=(),
        )
    return StateSpaceVerdict(
        bounded=boundedness.bounded,
        place_bounds=boundedness.place_bounds,
        safe=False if not boundedness.bounded else all(b <= 1 for b in boundedness.place_bounds),
        deadlock_path=deadlock_path if deadlock_known else None,
        dead_transitions=None,
        state_count=None,
        edge_count=None,
        state_limit_exceeded=limit_exceeded,
        omega_places=omega,
    )

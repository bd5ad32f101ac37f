"""Mutable token-game session shared by the REPL and the HTTP server.

Invariant: `marking` always equals the initial marking with `history`
replayed, so undo can simply drop the last entry and replay.
"""

from __future__ import annotations

from .net import PetriNet, enabled, fire, fire_sequence


class Session:
    def __init__(self, net: PetriNet):
        self.net = net
        self.marking = net.initial
        self.history: list[str] = []

    def enabled(self) -> tuple[str, ...]:
        return enabled(self.net, self.marking)

    def deadlocked(self) -> bool:
        return bool(self.net.transitions) and not self.enabled()

    def fire(self, transition: str) -> None:
        self.marking = fire(self.net, self.marking, transition)
        self.history.append(transition)

    def auto(self) -> str | None:
        """Fire the first enabled transition in declaration order."""
        choices = self.enabled()
        if not choices:
            return None
        self.fire(choices[0])
        return choices[0]

    def undo(self) -> str | None:
        if not self.history:
            return None
        undone = self.history.pop()
        self.marking = fire_sequence(self.net, self.net.initial, self.history)
        return undone

    def reset(self) -> None:
        self.marking = self.net.initial
        self.history = []

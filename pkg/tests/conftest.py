import random

import pytest

from petrikit import build_net, bakingsoda_net


@pytest.fixture(scope="session")
def soda():
    return bakingsoda_net()


@pytest.fixture
def transfer_net():
    # One transition moving a token from a to b.
    return build_net(
        name="transfer",
        places=[("a", 1), "b"],
        transitions=["t"],
        arcs=[("a", "t"), ("t", "b")],
    )


@pytest.fixture
def cycle_net():
    # Two transitions shuttling one token between a and b.
    return build_net(
        name="cycle",
        places=[("a", 1), "b"],
        transitions=["t1", "t2"],
        arcs=[("a", "t1"), ("t1", "b"), ("b", "t2"), ("t2", "a")],
    )


@pytest.fixture
def source_net():
    # Source transition with an empty preset: unbounded growth on p.
    return build_net(name="source", places=["p"], transitions=["t"], arcs=[("t", "p")])


@pytest.fixture
def empty_net():
    return build_net(name="empty")


def make_random_net(rng: random.Random, max_places=6, max_transitions=6,
                    max_weight=3, max_tokens=2):
    """Random small net for the property suites (may be unbounded)."""
    n_places = rng.randint(1, max_places)
    n_transitions = rng.randint(1, max_transitions)
    places = [(f"p{i}", rng.randint(0, max_tokens)) for i in range(n_places)]
    transitions = [f"t{j}" for j in range(n_transitions)]
    arcs = []
    for i in range(n_places):
        for j in range(n_transitions):
            if rng.random() < 0.3:
                arcs.append((f"p{i}", f"t{j}", rng.randint(1, max_weight)))
            if rng.random() < 0.3:
                arcs.append((f"t{j}", f"p{i}", rng.randint(1, max_weight)))
    return build_net(name=f"rand{rng.randint(0, 10**6)}", places=places,
                     transitions=transitions, arcs=arcs)

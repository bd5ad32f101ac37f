"""Randomized suites: elimination vs oracle, conservation along runs,
coverability vs BFS agreement, and serialization round-trips.

The suite bodies are plain functions so the acceptance module can run
them as criteria; the test classes below are thin wrappers.
"""

import random
from math import gcd

import oracles
from conftest import make_random_net
from petrikit import (
    build_net,
    check_bounded,
    enabled,
    fire,
    incidence,
    p_invariants,
    parse_dsl,
    parse_pnml,
    reachability_graph,
    t_invariants,
    write_dsl,
    write_pnml,
)
from petrikit.errors import StateLimitExceededError


def _oracle_shapes(net):
    """(places dict, transitions, arcs) for the oracle functions."""
    places = {p: m for p, m in zip(net.places, net.initial)}
    arcs = [(a.source, a.target, a.weight) for a in net.arcs]
    return places, list(net.transitions), arcs


def _balance_for_p(net):
    inc = incidence(net).combined
    return [[inc[p][t] for p in range(len(net.places))] for t in range(len(net.transitions))]


def _balance_for_t(net):
    inc = incidence(net).combined
    return [list(row) for row in inc]


_NETS_200 = None


def nets_200():
    global _NETS_200
    if _NETS_200 is None:
        rng = random.Random(90125)
        _NETS_200 = [make_random_net(rng) for _ in range(200)]
    return _NETS_200


def suite_semiflows_match_oracle():
    """200 random small nets: Farkas output equals the exhaustive-support
    oracle; balance, minimality and gcd normalization hold."""
    for net in nets_200():
        expected_p = oracles.minimal_semiflows(_balance_for_p(net), len(net.places))
        flows = p_invariants(net)
        assert [f.coeffs for f in flows] == expected_p, f"P-semiflows differ on {net.name}"
        expected_t = oracles.minimal_semiflows(_balance_for_t(net), len(net.transitions))
        assert [
            f.coeffs for f in t_invariants(net)
        ] == expected_t, f"T-semiflows differ on {net.name}"
        inc = incidence(net).combined
        for flow in flows:
            for t in range(len(net.transitions)):
                assert sum(flow.coeffs[p] * inc[p][t] for p in range(len(net.places))) == 0
            g = 0
            for c in flow.coeffs:
                g = gcd(g, c)
            assert g == 1
        masks = [sum(1 << i for i in f.support) for f in flows]
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                assert i == j or not (a & b == a and a != b), "support not minimal"


def suite_conservation_along_runs():
    """200 random firing sequences over independently-certified bounded
    nets: weighted sums stay constant, firing deltas equal incidence
    columns."""
    rng = random.Random(424242)
    sequences = 0
    nets = iter(nets_200() * 3)
    while sequences < 200:
        net = next(nets)
        places, transitions, arcs = _oracle_shapes(net)
        try:
            oracles.bfs_states(places, transitions, arcs, max_states=2000)
        except RuntimeError:
            continue  # not certified bounded at this cap; skip
        flows = p_invariants(net)
        mats = incidence(net).combined
        marking = net.initial
        for _ in range(30):
            options = enabled(net, marking)
            if not options:
                break
            t = rng.choice(options)
            after = fire(net, marking, t)
            col = net.transition_index[t]
            delta = tuple(a - b for a, b in zip(after, marking))
            assert delta == tuple(mats[p][col] for p in range(len(net.places)))
            for flow in flows:
                before_sum = sum(c * m for c, m in zip(flow.coeffs, marking))
                after_sum = sum(c * m for c, m in zip(flow.coeffs, after))
                assert before_sum == after_sum
            marking = after
        sequences += 1


def suite_boundedness_agreement():
    """Coverability and BFS agree wherever BFS terminates; the class of
    unbounded nets raises the state limit."""
    checked_bounded = 0
    checked_unbounded = 0
    for net in nets_200():
        verdict = check_bounded(net)
        if verdict.bounded:
            graph = reachability_graph(net, 200_000)
            checked_bounded += 1
            bounds = [max(m[p] for m in graph.states) for p in range(len(net.places))]
            assert tuple(bounds) == verdict.place_bounds
        else:
            try:
                reachability_graph(net, 3000)
            except StateLimitExceededError:
                checked_unbounded += 1
            else:
                raise AssertionError(f"{net.name}: coverability says unbounded, BFS finished")
    assert checked_bounded > 20
    assert checked_unbounded > 20
    source = build_net(places=["p"], transitions=["t"], arcs=[("t", "p")])
    assert not check_bounded(source).bounded


def suite_round_trips():
    """DSL and PNML round-trips are lossless on all generated nets."""
    for net in nets_200():
        assert parse_dsl(write_dsl(net)).build() == net
        assert parse_pnml(write_pnml(net)).build() == net


class TestSemiflowsAgainstOracle:
    def test_200_nets_match_the_exhaustive_oracle(self):
        suite_semiflows_match_oracle()


class TestConservationAlongRuns:
    def test_200_random_runs_conserve_weighted_sums(self):
        suite_conservation_along_runs()


class TestBoundednessAgreement:
    def test_coverability_agrees_with_bfs_where_bfs_terminates(self):
        suite_boundedness_agreement()

    def test_single_source_net_flagged_unbounded(self):
        net = build_net(places=["p"], transitions=["t"], arcs=[("t", "p")])
        assert not check_bounded(net).bounded


class TestRoundTrips:
    def test_dsl_and_pnml_lossless_on_all_generated_nets(self):
        suite_round_trips()

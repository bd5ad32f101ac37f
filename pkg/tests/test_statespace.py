import pytest

import golden
import oracles
from petrikit import (
    build_net,
    check_bounded,
    check_safe,
    dead_transitions,
    enabled,
    find_deadlock,
    fire,
    invariant_equations,
    reachability_graph,
    state_space_verdict,
)
from petrikit.errors import StateLimitExceededError, TruncatedGraphError


class TestReachabilityGraph:
    def test_bundled_graph_size(self, soda):
        graph = reachability_graph(soda, 10_000)
        assert len(graph.states) == golden.STATE_COUNT
        assert len(graph.edges) == golden.EDGE_COUNT
        assert graph.complete

    def test_discovery_matches_independent_bfs(self, soda):
        places, transitions, arcs = golden.as_tuples()
        markings, edges, deadlocks = oracles.bfs_states(places, transitions, arcs)
        graph = reachability_graph(soda)
        assert [tuple(m[p] for p in soda.places) for m in markings] == list(graph.states)
        assert edges == list(graph.edges)
        assert deadlocks == set(graph.deadlocks)

    def test_edges_replay_through_fire(self, soda):
        graph = reachability_graph(soda)
        for src, transition, dst in graph.edges:
            assert fire(soda, graph.states[src], transition) == graph.states[dst]
            assert transition in enabled(soda, graph.states[src])

    def test_states_all_zero_or_one(self, soda):
        graph = reachability_graph(soda)
        assert all(set(m) <= {0, 1} for m in graph.states)

    def test_equations_hold_in_every_state(self, soda):
        graph = reachability_graph(soda)
        for eq in invariant_equations(soda):
            assert all(eq.value_at(m) == eq.constant for m in graph.states)

    def test_isolated_net_has_one_state(self):
        net = build_net(
            places=[("lonely", 1), "needed"],
            transitions=["t"],
            arcs=[("needed", "t")],
        )
        graph = reachability_graph(net, 100)
        assert len(graph.states) == 1
        assert graph.edges == ()
        assert graph.deadlocks == frozenset({0})

    def test_source_net_exceeds_limit(self, source_net):
        with pytest.raises(StateLimitExceededError) as err:
            reachability_graph(source_net, 100)
        assert err.value.count == 100
        assert err.value.partial is not None
        assert not err.value.partial.complete

    def test_determinism(self, soda):
        assert reachability_graph(soda) == reachability_graph(soda)


class TestBoundedness:
    def test_bundled_net_bounded_with_unit_bounds(self, soda):
        verdict = check_bounded(soda)
        assert verdict.bounded
        assert verdict.place_bounds == (1,) * 18
        assert verdict.omega_places == ()

    def test_source_net_unbounded_with_witness(self, source_net):
        verdict = check_bounded(source_net)
        assert not verdict.bounded
        assert verdict.omega_places == ("p",)

    def test_empty_net_bounded(self, empty_net):
        assert check_bounded(empty_net).bounded

    def test_pumped_loop_is_unbounded(self):
        # t consumes one token and puts back two: classic pump.
        net = build_net(places=[("p", 1)], transitions=["t"], arcs=[("p", "t"), ("t", "p", 2)])
        verdict = check_bounded(net)
        assert not verdict.bounded
        assert verdict.omega_places == ("p",)


class TestSafeness:
    def test_bundled_net_safe(self, soda):
        verdict = check_safe(soda)
        assert verdict.safe
        assert verdict.bounded

    def test_two_initial_tokens_not_safe(self):
        net = build_net(places=[("p", 2)], transitions=[])
        verdict = check_safe(net)
        assert verdict.bounded and not verdict.safe
        assert verdict.violations == ("p",)

    def test_extra_token_on_p10_recomputed(self, soda):
        boosted = build_net(
            name=soda.name,
            places=[(p, t + (1 if p == "P10" else 0)) for p, t in zip(soda.places, soda.initial)],
            transitions=soda.transitions,
            arcs=soda.arcs,
        )
        verdict = check_safe(boosted)
        assert verdict.bounded and not verdict.safe
        assert verdict.violations == ("P10",)
        # P11 still never exceeds one: T4 fires at most once per P3 token.
        graph = reachability_graph(boosted)
        p11 = boosted.place_index["P11"]
        assert max(m[p11] for m in graph.states) == 1

    def test_unbounded_net_reports_witness(self, source_net):
        verdict = check_safe(source_net)
        assert not verdict.safe and not verdict.bounded
        assert verdict.violations == ("p",)


class TestDeadlock:
    def test_bundled_shortest_path(self, soda):
        assert find_deadlock(soda, 10_000) == golden.DEADLOCK_PATH

    def test_no_shorter_dead_sequence_exists(self, soda):
        places, transitions, arcs = golden.as_tuples()
        assert oracles.dead_sequences_upto(places, transitions, arcs, 6) == []

    def test_cycle_net_has_no_deadlock(self, cycle_net):
        assert find_deadlock(cycle_net) is None

    def test_dead_initial_marking_gives_empty_path(self):
        net = build_net(places=["p"], transitions=["t"], arcs=[("p", "t")])
        assert find_deadlock(net) == ()

    def test_net_without_transitions_never_deadlocks(self, empty_net):
        assert find_deadlock(empty_net) is None

    def test_limit_exceeded_when_undecided(self, source_net):
        with pytest.raises(StateLimitExceededError):
            find_deadlock(source_net, 50)


class TestDeadTransitions:
    def test_bundled_net_has_none(self, soda):
        graph = reachability_graph(soda)
        assert dead_transitions(graph, soda) == ()

    def test_underweight_place_kills_transition(self):
        net = build_net(
            places=[("p", 1)],
            transitions=["t"],
            arcs=[("p", "t", 2)],
        )
        graph = reachability_graph(net)
        assert dead_transitions(graph, net) == ("t",)

    def test_empty_net(self, empty_net):
        graph = reachability_graph(empty_net)
        assert dead_transitions(graph, empty_net) == ()

    def test_truncated_graph_rejected(self, source_net):
        try:
            reachability_graph(source_net, 10)
        except StateLimitExceededError as err:
            partial = err.partial
        with pytest.raises(TruncatedGraphError):
            dead_transitions(partial, source_net)


class TestVerdict:
    def test_bundled_summary(self, soda):
        verdict = state_space_verdict(soda)
        assert verdict.bounded and verdict.safe
        assert verdict.deadlock_path == golden.DEADLOCK_PATH
        assert verdict.dead_transitions == ()
        assert verdict.state_count == golden.STATE_COUNT
        assert verdict.edge_count == golden.EDGE_COUNT
        assert not verdict.state_limit_exceeded

    def test_safe_implies_bounded_on_random_inputs(self, source_net, cycle_net, soda):
        for net in (source_net, cycle_net, soda):
            verdict = state_space_verdict(net, 5_000)
            if verdict.safe:
                assert verdict.bounded

    def test_unbounded_summary(self, source_net):
        verdict = state_space_verdict(source_net, 500)
        assert not verdict.bounded
        assert not verdict.safe
        assert verdict.state_limit_exceeded
        assert verdict.state_count is None
        assert verdict.omega_places == ("p",)

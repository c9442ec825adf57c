import io
import itertools
import math

import networkx as nx
import numpy as np
import pandas as pd
import pytest

from consensus import constants
from consensus.binary_consensus_impl.analytics import complete_graph
from consensus.binary_consensus_impl.dao.protocol.init_spec import InitSpec
from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState
from consensus.binary_consensus_impl.dao.simulation.trial_outcome import TrialOutcome
from consensus.binary_consensus_impl.dao.protocol.configuration import Configuration
from consensus.binary_consensus_impl.exceptions.exceptions import InvalidInitSpecError, InvalidCountsError
from consensus.binary_consensus_impl.graph_model import generators
from consensus.binary_consensus_impl.simulator import simulator, monte_carlo


def test_trial_reaches_the_majority():
    q = generators.complete_graph(20)
    outcome = simulator.simulate_trial(q, InitSpec(15, 5), seed=1)
    assert outcome.correct
    assert not outcome.truncated
    assert 0 < outcome.t1 <= outcome.total_time
    assert outcome.final.count(NodeState.ZERO) == 10
    assert outcome.final.count(NodeState.E0) == 10
    assert outcome.seed == 1


def test_trial_is_reproducible():
    q = generators.path_graph(8)
    first = simulator.simulate_trial(q, InitSpec(6, 2), seed=42)
    second = simulator.simulate_trial(q, InitSpec(6, 2), seed=42)
    assert (first.t1, first.t2, first.total_events) == (second.t1, second.t2, second.total_events)
    assert first.final == second.final


def test_trial_without_minority_is_already_over():
    outcome = simulator.simulate_trial(generators.cycle_graph(5), InitSpec(5, 0), seed=0)
    assert (outcome.t1, outcome.t2, outcome.total_events) == (0.0, 0.0, 0)
    assert outcome.correct


def test_draw_stops_after_the_first_phase():
    outcome = simulator.simulate_trial(generators.complete_graph(6), InitSpec(3, 3), seed=3)
    assert outcome.t1 is not None
    assert outcome.t2 is None
    assert outcome.total_time is None
    assert not outcome.correct
    assert outcome.final.count(NodeState.ZERO) == 0
    assert outcome.final.count(NodeState.ONE) == 0


def test_truncated_trial():
    outcome = simulator.simulate_trial(generators.path_graph(10), InitSpec(6, 4), seed=0, t_max=1e-9)
    assert outcome.truncated
    assert outcome.t1 is None
    assert outcome.t2 is None


def test_trial_rejects_mismatched_counts():
    with pytest.raises(InvalidInitSpecError):
        simulator.simulate_trial(generators.path_graph(10), InitSpec(6, 2), seed=0)


def test_trial_rejects_a_state_one_majority():
    with pytest.raises(InvalidCountsError):
        simulator.simulate_trial(generators.path_graph(10), InitSpec(4, 6), seed=0)


def test_two_node_path_mean_first_phase():
    q = generators.path_graph(2)
    times = []
    for seed in range(4000):
        outcome = simulator.simulate_trial(q, InitSpec.from_states("10"), seed)
        assert outcome.t2 is None
        assert not outcome.correct
        assert outcome.final.count(NodeState.E0) == 1
        assert outcome.final.count(NodeState.E1) == 1
        times.append(outcome.t1)
    stderr = np.std(times, ddof=1) / math.sqrt(len(times))
    assert abs(np.mean(times) - 1.0) <= 3 * stderr


def test_three_node_complete_graph_mean_first_phase():
    q = generators.complete_graph(3)
    summary = monte_carlo.run_monte_carlo(q, InitSpec(2, 1), trials=4000, base_seed=0)
    assert abs(summary.mean_t1 - 1.0) <= 3 * summary.stderr_t1
    assert complete_graph.expected_t1_complete(3, 2, 1) == pytest.approx(1.0)


def test_debug_checks_hold_on_weighted_graphs():
    q = generators.from_networkx(nx.barbell_graph(4, 2))
    for seed in range(20):
        outcome = simulator.simulate_trial(q, InitSpec(6, 4, placement=constants.PROTOCOL.PLACEMENT_RANDOM,
                                                       seed=seed), seed=seed, debug=True)
        assert outcome.correct


def test_default_t_max():
    assert simulator.default_t_max(100) == constants.SIMULATION.DEFAULT_T_MAX
    assert simulator.default_t_max(100, 0.5) == pytest.approx(50 * 4 * (math.log(100) + 1))


def test_write_trial_log(tmpdir):
    q = generators.path_graph(4)
    outcome, text = simulator.write_trial_log(q, InitSpec.from_states("1000"), seed=7)
    log = pd.read_csv(io.StringIO(text), dtype={"state_i_before": str, "state_j_before": str,
                                                "state_i_after": str, "state_j_after": str})
    assert list(log.columns) == constants.SIMULATION.TRIAL_LOG_COLUMNS
    assert len(log) == outcome.total_events
    assert log["time"].is_monotonic_increasing
    assert ((log["j"] - log["i"]) == 1).all()
    path = tmpdir.join("trial.csv")
    simulator.write_trial_log(q, InitSpec.from_states("1000"), seed=7, path=str(path))
    assert path.read() == text


def test_summarize():
    final = Configuration.from_string("0A")
    outcomes = [TrialOutcome(1.0, 2.0, 5, final, False, 0), TrialOutcome(3.0, 4.0, 9, final, False, 1),
                TrialOutcome(None, None, 100, Configuration.from_string("1B"), True, 2)]
    summary = monte_carlo.summarize(outcomes, base_seed=0)
    assert summary.trials == 3
    assert summary.mean_t1 == pytest.approx(2.0)
    assert summary.stderr_t1 == pytest.approx(1.0)
    assert summary.ci95_t1 == pytest.approx(1.96)
    assert summary.mean_t2 == pytest.approx(3.0)
    assert summary.truncated == 1
    assert summary.t2_samples == 2
    assert summary.to_json()[constants.JSON_CONFIG.JSON_T2_USABLE]


def test_run_monte_carlo_needs_two_trials():
    with pytest.raises(ValueError):
        monte_carlo.run_monte_carlo(generators.complete_graph(4), InitSpec(3, 1), trials=1)


def test_run_monte_carlo_matches_the_exact_complete_graph_mean():
    n, s0, s1 = 20, 15, 5
    summary = monte_carlo.run_monte_carlo(generators.complete_graph(n), InitSpec(s0, s1), trials=400, base_seed=0)
    exact = complete_graph.expected_t1_complete(n, s0, s1)
    assert abs(summary.mean_t1 - exact) <= 4 * summary.stderr_t1
    assert summary.t2_usable
    assert summary.truncated == 0


def test_process_pool_gives_the_same_results():
    q = generators.cycle_graph(7)
    init = InitSpec(5, 2)
    serial = monte_carlo.run_trials(q, init, 6, base_seed=10)
    pooled = monte_carlo.run_trials(q, init, 6, base_seed=10, workers=2)
    assert [o.t1 for o in serial] == [o.t1 for o in pooled]
    assert [o.seed for o in pooled] == list(range(10, 16))


def test_survival_curve():
    q = generators.complete_graph(10)
    delta = 6.0 / 9.0
    curve = monte_carlo.survival_curve(q, InitSpec(8, 2), 50, [0.0, 1.0, 1e6], base_seed=0, delta=delta)
    assert curve.phase1[0] == 1.0
    assert curve.phase2[0] == 1.0
    assert curve.phase1[-1] == 0.0
    assert np.all(curve.phase2 >= curve.phase1)
    assert curve.tail_bound[0] == 1.0
    assert curve.tail_bound[1] == pytest.approx(min(1.0, 10 * math.exp(-delta)))
    frame = curve.to_dataframe()
    assert list(frame.columns) == constants.CSV_CONFIG.SURVIVAL_COLUMNS
    assert len(frame) == 3


@pytest.mark.parametrize("grid", [[], [1.0, 1.0], [-1.0, 2.0], [2.0, 1.0]])
def test_survival_curve_rejects_bad_grids(grid):
    with pytest.raises(ValueError):
        monte_carlo.survival_curve(generators.complete_graph(4), InitSpec(3, 1), 2, grid)


def _connected_atlas(max_n):
    for graph in nx.graph_atlas_g():
        if 2 <= graph.number_of_nodes() <= max_n and nx.is_connected(graph):
            yield graph


@pytest.mark.slow
def test_every_small_graph_converges_to_the_majority():
    for graph in _connected_atlas(6):
        n = graph.number_of_nodes()
        if n % 2 == 0:
            continue
        q = generators.from_networkx(graph)
        s1 = (n - 1) // 2
        s0 = s1 + 1
        for ones in itertools.combinations(range(n), s1):
            states = [NodeState.ONE if k in ones else NodeState.ZERO for k in range(n)]
            init = InitSpec.from_states(states)
            for outcome in monte_carlo.run_trials(q, init, 200, base_seed=0):
                assert not outcome.truncated
                assert outcome.final.count(NodeState.ZERO) == s0 - s1
                assert outcome.final.count(NodeState.E0) == 2 * s1


@pytest.mark.slow
def test_invariants_hold_at_every_contact():
    graphs = [generators.complete_graph(12), generators.path_graph(12), generators.cycle_graph(12),
              generators.star_graph(12), generators.from_networkx(nx.petersen_graph()),
              generators.path_graph(64), generators.cycle_graph(64)]
    events = 0
    for q in graphs:
        for seed in range(100 if q.n <= 12 else 50):
            init = InitSpec(q.n - q.n // 3, q.n // 3, placement=constants.PROTOCOL.PLACEMENT_RANDOM, seed=seed)
            events += simulator.simulate_trial(q, init, seed, debug=True).total_events
    assert events >= 10 ** 6


@pytest.mark.slow
def test_monte_carlo_complete_graph_acceptance():
    n, s0, s1 = 100, 75, 25
    summary = monte_carlo.run_monte_carlo(generators.complete_graph(n), InitSpec(s0, s1), trials=2000)
    assert abs(summary.mean_t1 - complete_graph.expected_t1_complete(n, s0, s1)) <= 3 * summary.stderr_t1


@pytest.mark.slow
def test_tail_bound_holds_on_the_complete_graph():
    n, s0, s1 = 50, 35, 15
    delta = (s0 - s1) / float(n - 1)
    grid = np.linspace(0.0, 40.0, 20)
    curve = monte_carlo.survival_curve(generators.complete_graph(n), InitSpec(s0, s1), 5000, grid, delta=delta)
    assert np.all(curve.phase1 <= curve.tail_bound + 3 * curve.binomial_stderr(1) + 1e-12)

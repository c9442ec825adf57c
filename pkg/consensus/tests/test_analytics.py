import math

import pytest

from consensus import constants
from consensus.exceptions import UnknownGraphFamilyError
from consensus.binary_consensus_impl.analytics import bounds, complete_graph, star_graph, er_graph
from consensus.binary_consensus_impl.dao.analytics.star_mode_state import StarModeState
from consensus.binary_consensus_impl.dao.graphs.er_params import ErParams
from consensus.binary_consensus_impl.dao.protocol.init_spec import InitSpec
from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState
from consensus.binary_consensus_impl.exceptions.exceptions import AnalyticDomainError, ModeRangeError, \
    UnsupportedHubStateError, InvalidCountsError
from consensus.binary_consensus_impl.graph_model import generators
from consensus.binary_consensus_impl.protocol import rules
from consensus.binary_consensus_impl.simulator import monte_carlo
from consensus.binary_consensus_impl.spectral import closed_forms, spectral


def test_theorem_bound():
    bound_t1, bound_t2, total = bounds.theorem_bound(0.5, 100)
    assert bound_t1 == pytest.approx((math.log(100) + 1.0) / 0.5)
    assert bound_t2 == bound_t1
    assert total == pytest.approx(2 * bound_t1)
    with pytest.raises(AnalyticDomainError):
        bounds.theorem_bound(0.0, 100)
    with pytest.raises(AnalyticDomainError):
        bounds.theorem_bound(0.5, 1)


def test_complete_graph_forms_agree():
    for n in range(2, 201):
        for s1 in range(0, n // 2 + 1):
            s0 = n - s1
            direct = complete_graph.epoch_sum(n, s0, s1)
            if s0 > s1:
                assert complete_graph.harmonic_form(n, s0, s1) == pytest.approx(direct, rel=1e-12, abs=1e-12)
            assert complete_graph.expected_t1_complete(n, s0, s1) == pytest.approx(direct, rel=1e-12, abs=1e-12)


def test_complete_graph_lumped_chain_oracle():
    for n in range(2, 9):
        for s1 in range(0, n // 2 + 1):
            s0 = n - s1
            assert complete_graph.lumped_chain_t1_oracle(n, s0, s1) == pytest.approx(
                complete_graph.expected_t1_complete(n, s0, s1), abs=1e-10)


def test_complete_graph_single_minority():
    # one state 1 node: the only epoch has rate (n - 1)/(n - 1) = 1
    assert complete_graph.expected_t1_complete(10, 9, 1) == pytest.approx(1.0)
    assert complete_graph.depletion_rates(10, 9, 1).tolist() == [1.0]


def test_complete_graph_counts_validation():
    with pytest.raises(InvalidCountsError):
        complete_graph.expected_t1_complete(10, 4, 6)
    with pytest.raises(InvalidCountsError):
        complete_graph.expected_t1_complete(10, 5, 4)
    with pytest.raises(InvalidCountsError):
        complete_graph.harmonic_form(10, 5, 5)


def test_draw_grows_like_the_asymptote():
    ratios = [complete_graph.expected_t1_complete(n, n // 2, n // 2) / n for n in (100, 400, 1600)]
    limit = math.pi ** 2 / 6.0
    assert ratios[0] < ratios[1] < ratios[2] < limit
    assert abs(ratios[2] - limit) / limit < 0.05
    assert complete_graph.draw_asymptote(1600) == pytest.approx(limit * 1600)


@pytest.mark.parametrize("n,mu,regime,dominant", [
    (100, 0.01, constants.ANALYTICS.REGIME_LINEAR, 100.0),
    (100, 0.5, constants.ANALYTICS.REGIME_LOGARITHMIC, math.log(100) / 0.5),
    (100, 0.1, constants.ANALYTICS.REGIME_POWER_LAW, 0.25 * 10.0 * math.log(100)),
])
def test_margin_asymptotics(n, mu, regime, dominant):
    asymptotics = complete_graph.margin_asymptotics(n, mu)
    assert asymptotics.regime == regime
    assert asymptotics.dominant_term == pytest.approx(dominant)
    assert asymptotics.log_term == pytest.approx(math.log(n * mu) / mu)


@pytest.mark.parametrize("mu", [0.0, 0.001, 1.5])
def test_margin_asymptotics_range(mu):
    with pytest.raises(ValueError):
        complete_graph.margin_asymptotics(100, mu)


def test_star_mode_state():
    mode = StarModeState(8, 6, 2, 1)
    assert (mode.x0, mode.x1, mode.xe) == (5, 1, 2)
    with pytest.raises(ModeRangeError):
        StarModeState(8, 6, 2, 2)
    with pytest.raises(ModeRangeError):
        star_graph.star_hitting_times(8, 6, 2, -1)


@pytest.mark.parametrize("args,expected", [
    ((8, 6, 2, 1), (7.84, 3.36, 8.26)),
    ((4, 3, 1, 0), (3.0, 1.0, 3.25)),
])
def test_star_hitting_times(args, expected):
    assert star_graph.star_hitting_times(*args) == pytest.approx(expected)
    assert star_graph.star_hitting_oracle(*args) == pytest.approx(expected)


def test_star_closed_forms_match_the_linear_solve():
    for n in range(3, 51):
        for s1 in range(1, n // 2 + 1):
            s0 = n - s1
            for i in range(s1):
                assert star_graph.star_hitting_times(n, s0, s1, i) == pytest.approx(
                    star_graph.star_hitting_oracle(n, s0, s1, i), rel=1e-10)


def test_expected_t1_star():
    assert star_graph.expected_t1_star(8, 6, 2, NodeState.ZERO) == pytest.approx(3.5 + 8.26)
    assert star_graph.expected_t1_star(8, 6, 2, "one") == pytest.approx(7.0 / 6.0 + 8.26)
    with pytest.raises(UnsupportedHubStateError):
        star_graph.expected_t1_star(8, 6, 2, NodeState.E0)
    with pytest.raises(UnsupportedHubStateError):
        star_graph.expected_t1_star(8, 6, 2, "undecided")
    with pytest.raises(ModeRangeError):
        star_graph.expected_t1_star(8, 8, 0, "zero")


def test_star_harmonic_decomposition():
    for n, s1 in [(10, 3), (50, 20), (101, 50), (400, 150)]:
        s0 = n - s1
        assert star_graph.star_mode_sum_harmonic(n, s0, s1) == pytest.approx(
            star_graph.star_mode_sum(n, s0, s1), rel=1e-9)
    with pytest.raises(AnalyticDomainError):
        star_graph.star_mode_sum_harmonic(10, 5, 5)


def test_star_asymptote():
    n, s0, s1 = 10000, 7500, 2500
    mode_sum = star_graph.star_mode_sum(n, s0, s1)
    dominant = star_graph.star_dominant_term(n, s0)
    assert dominant == pytest.approx(n * math.log(n) / (0.5 * 1.5))
    assert abs(mode_sum - dominant) / dominant < 0.15


def test_exact_values_respect_the_bound():
    for n in (4, 10, 25, 50, 100, 200):
        for s1 in range(1, (n + 1) // 2):
            s0 = n - s1
            complete_bound = bounds.theorem_bound(closed_forms.closed_form_complete(n, s0, s1), n)[0]
            assert complete_graph.expected_t1_complete(n, s0, s1) <= complete_bound
            star_bound = bounds.theorem_bound(closed_forms.closed_form_star(n, float(s0) / n), n)[0]
            for hub in (NodeState.ZERO, NodeState.ONE):
                assert star_graph.expected_t1_star(n, s0, s1, hub) <= star_bound


def test_phi():
    assert er_graph.phi(0.0) == 1.0
    assert er_graph.phi(1.0) == 0.0
    assert er_graph.phi(0.5) == pytest.approx(0.5 * math.log(0.5) + 0.5)
    assert er_graph.phi_inverse(er_graph.phi(0.3)) == pytest.approx(0.3, abs=1e-9)
    assert 0.18 <= er_graph.phi_inverse(0.5) <= 0.19
    assert er_graph.phi_inverse(1.0) == 0.0
    assert er_graph.phi_inverse(0.0) == 1.0
    with pytest.raises(AnalyticDomainError):
        er_graph.phi(1.5)
    with pytest.raises(AnalyticDomainError):
        er_graph.phi_inverse(-0.1)


def test_phi_inverse_on_a_grid():
    for k in range(1, 20):
        x = 0.05 * k
        assert er_graph.phi_inverse(er_graph.phi(x)) == pytest.approx(x, abs=1e-9), x


@pytest.mark.parametrize("n", [100, 101])
def test_complete_graph_mean_decreases_with_the_margin(n):
    means = [complete_graph.expected_t1_complete(n, (n + k) // 2, (n - k) // 2) for k in range(n % 2, n, 2)]
    assert all(later < earlier for earlier, later in zip(means, means[1:]))


def test_er_time_bound():
    bound = er_graph.er_time_bound(1000, 100, 0.75)
    assert bound == pytest.approx(math.log(1000) / closed_forms.delta_er_bound(1000, 100, 0.75))
    assert er_graph.er_time_bound(1000, 200, 0.75) < bound
    with pytest.raises(AnalyticDomainError):
        er_graph.er_time_bound(1000, 4, 0.75)


def test_er_failure_probability_decreases_with_density():
    assert er_graph.er_failure_probability(1000, 200, 0.75, 0.1) < er_graph.er_failure_probability(1000, 100,
                                                                                                    0.75, 0.1)
    assert er_graph.er_failure_probability(1000, 100, 0.75, 0.1) > 0


def test_family_asymptotic_bound():
    assert bounds.family_asymptotic_bound(constants.GRAPH.COMPLETE, 100, 0.75) == pytest.approx(
        (math.log(100) + 1) / 0.5)
    assert bounds.family_asymptotic_bound(constants.GRAPH.STAR, 100, 0.75) == pytest.approx(
        100 * (math.log(100) + 1) / 0.5)
    assert bounds.family_asymptotic_bound(constants.GRAPH.PATH, 100, 0.75) == pytest.approx(
        16 * 0.0625 * 1e4 * math.log(100) / math.pi ** 2)
    assert bounds.family_asymptotic_bound(constants.GRAPH.CYCLE, 100, 0.75) == pytest.approx(
        4 * 0.0625 * 1e4 * math.log(100) / math.pi ** 2)
    assert bounds.family_asymptotic_bound(constants.GRAPH.ER, 1000, 0.75, c=100) == pytest.approx(
        er_graph.er_time_bound(1000, 100, 0.75))
    with pytest.raises(AnalyticDomainError):
        bounds.family_asymptotic_bound(constants.GRAPH.PATH, 100, 1.0)
    with pytest.raises(AnalyticDomainError):
        bounds.family_asymptotic_bound(constants.GRAPH.ER, 1000, 0.75)
    with pytest.raises(UnknownGraphFamilyError):
        bounds.family_asymptotic_bound(constants.GRAPH.FILE, 100, 0.75)


def test_analytic_report_complete():
    report = bounds.analytic_report(constants.GRAPH.COMPLETE, 100, 75, 25)
    assert report.delta == pytest.approx(50.0 / 99.0)
    assert report.exact_t1 == pytest.approx(complete_graph.expected_t1_complete(100, 75, 25))
    assert report.exact_t1 <= report.bound_t1
    assert report.dominant_term == pytest.approx(math.log(100) / 0.5)
    assert constants.ANALYTICS.NOTE_HARMONIC_CLOSED_FORM in report.notes
    payload = report.to_json()
    assert payload[constants.JSON_CONFIG.JSON_BOUND_TOTAL] == pytest.approx(2 * report.bound_t1)


def test_analytic_report_star_and_er():
    star = bounds.analytic_report(constants.GRAPH.STAR, 8, 6, 2, hub_initial="zero")
    assert star.exact_t1 == pytest.approx(11.76)
    assert constants.ANALYTICS.NOTE_STAR_MODE_SUM in star.notes
    assert bounds.analytic_report(constants.GRAPH.STAR, 8, 6, 2).exact_t1 is None
    er = bounds.analytic_report(constants.GRAPH.ER, 1000, 750, 250, c=100)
    assert er.delta == pytest.approx(closed_forms.delta_er_bound(1000, 100, 0.75))
    assert constants.ANALYTICS.NOTE_ER_PHI_INVERSE_BOUND in er.notes
    with pytest.raises(AnalyticDomainError):
        bounds.analytic_report(constants.GRAPH.ER, 1000, 750, 250)
    with pytest.raises(InvalidCountsError):
        bounds.analytic_report(constants.GRAPH.COMPLETE, 10, 5, 5)


@pytest.mark.slow
def test_er_bound_holds_with_high_probability():
    n, c, alpha = 1000, 100, 0.75
    s0 = int(alpha * n)
    bound = er_graph.er_time_bound(n, c, alpha)
    below = 0
    for sample in range(20):
        q = generators.erdos_renyi_graph(ErParams(n, c, seed=1000 * sample))
        summary = monte_carlo.run_monte_carlo(q, InitSpec(s0, n - s0), trials=100, base_seed=sample)
        if summary.mean_t1 <= bound and summary.mean_t2 <= bound:
            below += 1
    assert below >= 19


@pytest.mark.slow
def test_simulated_means_respect_the_bound():
    for n in (20, 50):
        s1 = n // 4
        s0 = n - s1
        alpha = float(s0) / n
        graphs = [
            (generators.path_graph(n), closed_forms.closed_form_path(n, alpha)),
            (generators.cycle_graph(n), closed_forms.closed_form_cycle(n, alpha)),
            (generators.star_graph(n), closed_forms.closed_form_star(n, alpha)),
        ]
        er = generators.erdos_renyi_graph(ErParams(n, 5, seed=n))
        if n <= constants.SPECTRAL.MAX_ENUMERATION_N:
            graphs.append((er, spectral.delta_exhaustive(er, s0, s1).delta))
        else:
            graphs.append((er, closed_forms.delta_er_bound(n, 5, alpha)))
        for q, delta in graphs:
            bound = bounds.theorem_bound(delta, n)[0]
            summary = monte_carlo.run_monte_carlo(q, InitSpec(s0, s1), trials=200, delta=delta)
            assert summary.mean_t1 <= bound + 3 * summary.stderr_t1
            assert summary.mean_t2 <= bound + 3 * summary.stderr_t2


@pytest.mark.slow
@pytest.mark.parametrize("hub", [NodeState.ZERO, NodeState.ONE])
def test_star_mean_first_phase_matches_monte_carlo(hub):
    n, s0, s1 = 100, 75, 25
    summary = monte_carlo.run_monte_carlo(generators.star_graph(n), rules.hub_init_spec(s0, s1, hub), trials=2000)
    exact = star_graph.expected_t1_star(n, s0, s1, hub)
    assert abs(summary.mean_t1 - exact) <= 3 * summary.stderr_t1

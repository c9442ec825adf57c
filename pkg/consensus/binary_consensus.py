"""
A toolkit for binary interval consensus. This module exposes an API for simulating the 4-state protocol on
weighted connected graphs and for the spectral and analytic quantities that bound its convergence time.
It hides complexity and provides utility methods such as:

    - `complete_graph()`, `path_graph()`, `cycle_graph()`, `star_graph()`, `erdos_renyi_graph()`.
    - `load_edge_list()`.
    - `apply_contact()` and `replay_example_trace()`.
    - `simulate_trial()` and `run_monte_carlo()`.
    - `survival_curve()`
    - `delta_exhaustive()` and the closed forms `closed_form_complete()`, `closed_form_path()`,
      `closed_form_cycle()`, `closed_form_star()`
    - `theorem_bound()`
    - `expected_t1_complete()` and `expected_t1_star()`
    - `analytic_report()`
    - `run()`

Nodes are numbered 1..n in every public signature. The four node states are ordered
ZERO < E0 < E1 < ONE and encoded as the characters `0 A B 1`. State ZERO holds the initial majority by
convention (s0 >= s1).

Below is some example usages of this API:

    >>> from consensus import binary_consensus
    >>>
    >>> # Contact-rate matrices of the named families: unit rates on the path and cycle, 1/(n-1) on the complete
    >>> # graph and the star
    >>> q = binary_consensus.complete_graph(100)
    >>> q = binary_consensus.path_graph(8)
    >>> q = binary_consensus.star_graph(1000)
    >>> # Erdos-Renyi graphs with p_n = c log(n)/n are resampled until connected
    >>> q = binary_consensus.erdos_renyi_graph(1000, 100, seed=7)
    >>> # Or load an edge-list: first line n, then lines `i j rate` with 1-based nodes
    >>> q = binary_consensus.load_edge_list("3\\n1 2 1.0\\n2 3 0.5\\n")
    >>>
    >>> # The pairwise update rules
    >>> binary_consensus.apply_contact(NodeState.ZERO, NodeState.ONE)
    (<NodeState.E1: 2>, <NodeState.E0: 1>)
    >>> [c.to_string() for c in binary_consensus.replay_example_trace()]
    ['AB00', 'AB00', 'BA00', 'B0A0', '0AA0']
    >>>
    >>> # A single seeded trial and a Monte Carlo estimate of E(T1) and E(T2)
    >>> q = binary_consensus.complete_graph(100)
    >>> init = binary_consensus.init_spec(75, 25)
    >>> outcome = binary_consensus.simulate_trial(q, init, seed=3)
    >>> summary = binary_consensus.run_monte_carlo(q, init, trials=2000, base_seed=0, workers=4)
    >>> summary.mean_t1, summary.ci95_t1
    >>>
    >>> # The decay rate delta(Q, alpha), by enumeration (n <= 24 unless CONSENSUS_MAX_N says otherwise) or
    >>> # by the closed form of the family
    >>> binary_consensus.delta_exhaustive(binary_consensus.path_graph(8), 6, 2).delta
    >>> binary_consensus.closed_form_path(8, 0.75)
    >>>
    >>> # Bounds and exact values of the convergence time
    >>> binary_consensus.theorem_bound(0.5, 100)
    >>> binary_consensus.expected_t1_complete(100, 75, 25)
    >>> binary_consensus.expected_t1_star(8, 6, 2, "zero")
    >>> binary_consensus.analytic_report("star", 1000, 750, 250, hub_initial="one").to_json()
    >>>
    >>> # Batch experiments, the same as the `consensus` command line driver
    >>> spec = binary_consensus.ExperimentSpec("sim", "complete", n=100, alpha=0.75, trials=2000)
    >>> text = binary_consensus.run(spec)
"""

from consensus import constants
from consensus.binary_consensus_impl import core
from consensus.binary_consensus_impl.analytics import bounds, complete_graph as _complete, er_graph as _er, \
    star_graph as _star
from consensus.binary_consensus_impl.dao.experiment.experiment_spec import ExperimentSpec
from consensus.binary_consensus_impl.dao.graphs.er_params import ErParams
from consensus.binary_consensus_impl.dao.protocol.configuration import Configuration
from consensus.binary_consensus_impl.dao.protocol.init_spec import InitSpec
from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState
from consensus.binary_consensus_impl.dao.spectral.subset_mask import SubsetMask
from consensus.binary_consensus_impl.graph_model import generators, edge_list
from consensus.binary_consensus_impl.protocol import rules
from consensus.binary_consensus_impl.simulator import simulator, monte_carlo
from consensus.binary_consensus_impl.spectral import spectral, closed_forms

__all__ = ["ExperimentSpec", "NodeState", "Configuration", "InitSpec", "SubsetMask"]


def complete_graph(n):
    """
    The complete graph on n nodes, q_{i,j} = 1/(n - 1) for every pair so that each node meets some node at rate 1

    Args:
        :n: number of nodes, at least 2

    Returns:
        the ContactMatrix
    """
    return generators.complete_graph(n)


def path_graph(n):
    """
    The path 1 - 2 - ... - n with unit rates

    Args:
        :n: number of nodes, at least 2

    Returns:
        the ContactMatrix
    """
    return generators.path_graph(n)


def cycle_graph(n):
    """
    The cycle on n nodes with unit rates

    Args:
        :n: number of nodes, at least 3

    Returns:
        the ContactMatrix
    """
    return generators.cycle_graph(n)


def star_graph(n):
    """
    The star with hub node 1 and leaves 2..n, every edge at rate 1/(n - 1) so that the hub meets some leaf at rate 1

    Args:
        :n: number of nodes, at least 2

    Returns:
        the ContactMatrix
    """
    return generators.star_graph(n)


def erdos_renyi_graph(n, c, seed=0):
    """
    Samples a connected G(n, p_n) graph with p_n = c log(n)/n and edge rate 1/((n - 1) p_n). Disconnected samples
    are rejected and resampled (with seed + attempt) up to 100 times.

    Example usage:

    >>> q = binary_consensus.erdos_renyi_graph(1000, 100, seed=7)

    Args:
        :n: number of nodes
        :c: the edge-density constant, c log(n) <= n
        :seed: the seed of the first attempt

    Returns:
        the ContactMatrix

    Raises:
        :GraphGenerationError: if no connected sample was found
    """
    return generators.erdos_renyi_graph(ErParams(n, c, seed=seed))


def from_networkx(graph, rate=1.0):
    """
    Converts a connected networkx graph; edges carry their `weight` attribute or the given rate

    Returns:
        the ContactMatrix
    """
    return generators.from_networkx(graph, rate=rate)


def to_networkx(q):
    """
    Returns:
        a networkx graph with nodes 0..n-1 and the contact rates as `weight` edge attributes
    """
    return generators.to_networkx(q)


def node_degrees(q):
    """
    Returns:
        numpy array of the per-node total contact rates q_i
    """
    return generators.node_degrees(q)


def load_edge_list(text):
    """
    Parses an edge-list: the first line holds n, every other line an edge `i j rate` (1-based nodes). Blank lines and
    lines starting with `#` are skipped.

    Args:
        :text: the edge-list text

    Returns:
        the ContactMatrix

    Raises:
        :EdgeListParseError: on a malformed line, carrying its line number
        :EdgeListConsistencyError: on self-loops, negative rates or repeated pairs
        :DisconnectedGraphError: if the graph is not connected
    """
    return edge_list.load_edge_list(text)


def load_edge_list_file(path):
    """
    Reads an edge-list file, see `load_edge_list()`
    """
    return edge_list.load_edge_list_file(path)


def apply_contact(a, b):
    """
    Applies the update rules of the protocol to a pair of states

    Example usage:

    >>> binary_consensus.apply_contact(NodeState.E1, NodeState.ZERO)
    (<NodeState.ZERO: 0>, <NodeState.E0: 1>)

    Args:
        :a: the state of the first node
        :b: the state of the second node

    Returns:
        the post-contact states in the order of the arguments
    """
    return rules.apply_contact(a, b)


def replay_example_trace():
    """
    Replays the contacts (1,2), (3,4), (1,2), (2,3), (1,2) on the four-node line network from (1, 0, 0, 0)

    Returns:
        the list of the five configurations after each contact
    """
    return rules.replay_example_trace()


def conserved_difference(configuration):
    """
    Returns:
        count(ZERO) - count(ONE), which no contact changes
    """
    return rules.conserved_difference(configuration)


def encode_configuration(configuration):
    """
    Returns:
        the `0 A B 1` text encoding of a configuration
    """
    return configuration.to_string()


def decode_configuration(text):
    """
    Returns:
        the configuration of a `0 A B 1` text encoding
    """
    return Configuration.from_string(text)


def init_spec(s0, s1, placement=constants.PROTOCOL.PLACEMENT_PREFIX, seed=None):
    """
    Builds an initial assignment of the opinions

    Args:
        :s0: number of nodes initially in state ZERO
        :s1: number of nodes initially in state ONE
        :placement: prefix (nodes 1..s0 in ZERO) or random
        :seed: the shuffle seed of the random placement

    Returns:
        the InitSpec
    """
    return InitSpec(s0, s1, placement=placement, seed=seed)


def initial_configuration(init):
    """
    Returns:
        the initial Configuration of an InitSpec
    """
    return rules.initial_configuration(init)


def simulate_trial(q, init, seed, t_max=None, delta=None):
    """
    Simulates one trajectory of the protocol by the aggregate-rate method: the time to the next contact is
    exponential with the total rate, the pair is drawn proportionally to its rate.

    Args:
        :q: the ContactMatrix
        :init: the InitSpec
        :seed: the seed of the trial
        :t_max: the simulated time after which the trial is truncated, defaults to 50 times the theorem bound
        :delta: the decay rate used for the default t_max

    Returns:
        the TrialOutcome
    """
    return simulator.simulate_trial(q, init, seed, t_max=t_max, delta=delta)


def run_monte_carlo(q, init, trials, base_seed=0, t_max=None, workers=1):
    """
    Runs independent trials (trial k uses seed base_seed + k) and summarizes them

    Example usage:

    >>> summary = binary_consensus.run_monte_carlo(binary_consensus.complete_graph(100),
    >>>                                            binary_consensus.init_spec(75, 25), trials=2000)

    Args:
        :q: the ContactMatrix
        :init: the InitSpec
        :trials: number of trials, at least 2
        :base_seed: seed of the first trial
        :t_max: the truncation time of every trial
        :workers: number of worker processes

    Returns:
        the MonteCarloSummary with means and 95% confidence half-widths
    """
    return monte_carlo.run_monte_carlo(q, init, trials, base_seed=base_seed, t_max=t_max, workers=workers)


def survival_curve(q, init, trials, grid, base_seed=0, delta=None, workers=1):
    """
    Fraction of trials still in phase 1 (some ONE node) and in phase 2 (some E1 node) at each time of the grid

    Args:
        :q: the ContactMatrix
        :init: the InitSpec
        :trials: number of trials
        :grid: increasing time points
        :base_seed: seed of the first trial
        :delta: the decay rate; when given the tail bound min(1, n e^{-delta t}) is attached
        :workers: number of worker processes

    Returns:
        the SurvivalCurve
    """
    return monte_carlo.survival_curve(q, init, trials, grid, base_seed=base_seed, delta=delta, workers=workers)


def write_trial_log(q, init, seed, path=None):
    """
    Simulates one trial and records every contact as a CSV event log

    Returns:
        (the TrialOutcome, the CSV text)
    """
    return simulator.write_trial_log(q, init, seed, path=path)


def subset(members, n):
    """
    Returns:
        the SubsetMask of the given 1-based node indices
    """
    return SubsetMask.from_members(members, n)


def build_qs(q, s):
    """
    Builds Q_S: the generator of Q with the rows of S stripped of their off-diagonal mass

    Args:
        :q: the ContactMatrix
        :s: the non-empty SubsetMask

    Returns:
        the KilledMatrix
    """
    return spectral.build_qs(q, s)


def dominant_eigenvalue(qs, solver=constants.SPECTRAL.SOLVER_LAPACK):
    """
    Returns:
        the largest eigenvalue of Q_S, strictly negative on connected graphs
    """
    return spectral.dominant_eigenvalue(qs, solver=solver)


def delta_exhaustive(q, s0, s1):
    """
    Computes delta(Q, alpha) by enumerating every subset of size s0 - s1

    Args:
        :q: the ContactMatrix
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes

    Returns:
        the SpectralResult

    Raises:
        :EnumerationGuardError: if n exceeds the enumeration guard
    """
    return spectral.delta_exhaustive(q, s0, s1)


def delta_range_min(q, s0, s1):
    """
    Returns:
        the SpectralResult of the minimum over every subset size from s0 - s1 to s0
    """
    return spectral.delta_range_min(q, s0, s1)


def delta_sampled(q, s0, s1, samples=constants.SPECTRAL.DEFAULT_SAMPLES, seed=0):
    """
    Upper estimate of delta over random subsets, for graphs beyond the enumeration guard

    Returns:
        the SpectralResult, method sampled
    """
    return spectral.delta_sampled(q, s0, s1, samples=samples, seed=seed)


def cut_rate_bound(q, s):
    return spectral.cut_rate_bound(q, s)


def tridiagonal_eigenvalues(m, kind=constants.SPECTRAL.TRIDIAGONAL_BOTH_ENDS):
    return spectral.tridiagonal_eigenvalues(m, kind=kind)


def closed_form_complete(n, s0, s1):
    """
    Returns:
        delta of the complete graph, (s0 - s1)/(n - 1)
    """
    return closed_forms.closed_form_complete(n, s0, s1)


def closed_form_path(n, alpha):
    """
    Returns:
        delta of the path, 2 (1 - cos(pi / (4 (1 - alpha) n + 1)))
    """
    return closed_forms.closed_form_path(n, alpha)


def closed_form_cycle(n, alpha):
    """
    Returns:
        delta of the cycle, 2 (1 - cos(pi / (2 (1 - alpha) n + 1)))
    """
    return closed_forms.closed_form_cycle(n, alpha)


def closed_form_star(n, alpha):
    """
    Returns:
        delta of the star with rates 1/(n - 1)
    """
    return closed_forms.closed_form_star(n, alpha)


def closed_form_delta(graph_family, n, s0, s1):
    """
    Returns:
        the SpectralResult of the closed form of a named family
    """
    return closed_forms.closed_form_delta(graph_family, n, s0, s1)


def delta_er_bound(n, c, alpha):
    """
    Returns:
        the high probability lower bound (2 alpha - 1) phi^{-1}(2 / (c (2 alpha - 1))) on delta of an Erdos-Renyi
        graph
    """
    return closed_forms.delta_er_bound(n, c, alpha)


def delta_er_bound_finite(n, c, alpha):
    return closed_forms.delta_er_bound_finite(n, c, alpha)


def theorem_bound(delta, n):
    """
    Bounds the expected duration of both phases by (log n + 1)/delta

    Example usage:

    >>> binary_consensus.theorem_bound(binary_consensus.closed_form_complete(100, 75, 25), 100)

    Args:
        :delta: the decay rate
        :n: number of nodes

    Returns:
        (bound_t1, bound_t2, bound_total)
    """
    return bounds.theorem_bound(delta, n)


def family_asymptotic_bound(graph_family, n, alpha, c=None):
    return bounds.family_asymptotic_bound(graph_family, n, alpha, c=c)


def expected_t1_complete(n, s0, s1):
    """
    Exact expected duration of the first phase on the complete graph,
    (n - 1)/(s0 - s1) (H_{s1} + H_{s0-s1} - H_{s0})

    Args:
        :n: number of nodes
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes

    Returns:
        E(T1)
    """
    return _complete.expected_t1_complete(n, s0, s1)


def lumped_chain_t1_oracle(n, s0, s1):
    return _complete.lumped_chain_t1_oracle(n, s0, s1)


def draw_asymptote(n):
    return _complete.draw_asymptote(n)


def margin_asymptotics(n, mu):
    """
    Classifies the growth of E(T1) on the complete graph with the voting margin mu = (s0 - s1)/n

    Returns:
        the MarginAsymptotics (regime theta_n, theta_log_n or power_law, and the dominant term)
    """
    return _complete.margin_asymptotics(n, mu)


def star_hitting_times(n, s0, s1, i):
    """
    Returns:
        (phi_0, phi_1, phi_e), the mean time to the next state 1 depletion on the star in mode i
    """
    return _star.star_hitting_times(n, s0, s1, i)


def star_hitting_oracle(n, s0, s1, i):
    return _star.star_hitting_oracle(n, s0, s1, i)


def expected_t1_star(n, s0, s1, hub_initial):
    """
    Exact expected duration of the first phase on the star

    Args:
        :n: number of nodes
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes
        :hub_initial: initial hub state, NodeState.ZERO/NodeState.ONE or "zero"/"one"

    Returns:
        E(T1)
    """
    return _star.expected_t1_star(n, s0, s1, hub_initial)


def star_mode_sum_harmonic(n, s0, s1):
    return _star.star_mode_sum_harmonic(n, s0, s1)


def star_dominant_term(n, s0):
    return _star.star_dominant_term(n, s0)


def phi(x):
    """
    Returns:
        x log(x) + 1 - x on [0, 1]
    """
    return _er.phi(x)


def phi_inverse(y):
    """
    Returns:
        the x in [0, 1] with phi(x) = y
    """
    return _er.phi_inverse(y)


def er_time_bound(n, c, alpha):
    """
    Returns:
        log(n) / ((2 alpha - 1) phi^{-1}(2 / (c (2 alpha - 1)))), the bound on each phase on an Erdos-Renyi graph
    """
    return _er.er_time_bound(n, c, alpha)


def er_failure_probability(n, c, alpha, x):
    return _er.er_failure_probability(n, c, alpha, x)


def analytic_report(graph_family, n, s0, s1, hub_initial=None, c=None):
    """
    Assembles the bounds, exact values and asymptotic terms known for a family

    Example usage:

    >>> binary_consensus.analytic_report("complete", 100, 75, 25).to_json()

    Args:
        :graph_family: complete, path, cycle, star or er
        :n: number of nodes
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes
        :hub_initial: initial hub state of the star
        :c: the edge-density constant of the er family

    Returns:
        the AnalyticReport
    """
    return bounds.analytic_report(graph_family, n, s0, s1, hub_initial=hub_initial, c=c)


def run(spec):
    """
    Runs a batch experiment and writes its table to spec.out (stdout when absent)

    Args:
        :spec: the ExperimentSpec

    Returns:
        the rendered CSV or JSON text

    Raises:
        :ExperimentSpecError: if the spec is inconsistent
        :UnknownGraphFamilyError: if the graph family is not supported
    """
    return core._do_run(spec)

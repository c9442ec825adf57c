"""
Exact event-driven simulation of binary interval consensus under asynchronous Poisson contacts.

The superposition of the pair clocks is sampled with the aggregate-rate method: the waiting time to the next
contact is exponential with rate R = sum_{i<j} q_{i,j} and the contacting pair is (i, j) with probability
q_{i,j}/R, looked up by binary search in the cumulative rate table. Random numbers are drawn in batches from a
Philox counter-based generator seeded per trial, so trial k is reproducible on its own.
"""

import logging
import math

import numpy as np
import pandas as pd

from consensus import constants
from consensus.binary_consensus_impl.dao.protocol.configuration import Configuration
from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState
from consensus.binary_consensus_impl.dao.simulation.trial_outcome import TrialOutcome
from consensus.binary_consensus_impl.protocol import rules
from consensus.binary_consensus_impl.util import bc_utils

_ZERO, _E1, _ONE = int(NodeState.ZERO), int(NodeState.E1), int(NodeState.ONE)


def default_t_max(n, delta=None):
    """
    Time horizon of a trial: 50 times the bound 2 (log n + 1)/delta on the expected convergence time when delta is
    known, else a fixed large horizon

    Args:
        :n: number of nodes
        :delta: the decay rate of the graph, optional

    Returns:
        the horizon
    """
    if delta is None or delta <= 0:
        return constants.SIMULATION.DEFAULT_T_MAX
    return constants.SIMULATION.T_MAX_BOUND_MULTIPLE * (2.0 / delta) * (math.log(n) + 1.0)


def trial_rng(seed):
    """
    Returns:
        the numpy Generator of a trial, backed by a Philox counter-based bit generator
    """
    return np.random.Generator(np.random.Philox(seed))


class _ContactSampler(object):
    """
    Draws batches of (waiting time, edge index) pairs for a contact-rate matrix
    """

    def __init__(self, matrix, rng, batch_size=constants.SIMULATION.EVENT_BATCH_SIZE):
        self.edges = matrix.edges
        self.cumulative = np.cumsum(matrix.edge_rates)
        self.total_rate = float(self.cumulative[-1])
        self.last_edge = len(self.cumulative) - 1
        self.rng = rng
        self.batch_size = batch_size

    def batches(self):
        while True:
            waits = self.rng.exponential(1.0 / self.total_rate, size=self.batch_size)
            points = self.rng.random(size=self.batch_size) * self.total_rate
            picks = np.minimum(np.searchsorted(self.cumulative, points, side="right"), self.last_edge)
            yield waits, self.edges[picks]


def simulate_trial(matrix, init, seed, t_max=None, delta=None, debug=False, event_log=None):
    """
    Simulates one run of the protocol until both phases are over, a draw is detected at the end of the first phase,
    or the time horizon is reached

    Args:
        :matrix: the ContactMatrix
        :init: the InitSpec of the initial opinions
        :seed: the seed of the trial
        :t_max: the time horizon, defaults to default_t_max(n, delta)
        :delta: the decay rate of the graph, used for the default horizon
        :debug: check the conserved difference after every contact
        :event_log: optional list, receives one row per contact with the columns of the trial log

    Returns:
        the TrialOutcome

    Raises:
        :InvalidInitSpecError: if the initial counts do not match the graph
        :InvalidCountsError: if state 1 holds the majority
        :AssertionError: if the conserved difference changed during the run
    """
    init.validate_for(matrix.n)
    bc_utils._validate_counts(matrix.n, init.s0, init.s1)
    if t_max is None:
        t_max = default_t_max(matrix.n, delta)
    rng = trial_rng(seed)
    initial = rules.initial_configuration(init)
    states = np.array(initial.states, dtype=np.int8)
    counts = np.bincount(states, minlength=4)
    difference = init.s0 - init.s1
    table = rules.TRANSITION_TABLE

    t = 0.0
    t1 = 0.0 if counts[_ONE] == 0 else None
    t2 = None
    events = 0
    truncated = False
    done = _phase_two_done(counts, t1, init)
    if done and t1 is not None and not init.is_draw:
        t2 = 0.0

    sampler = _ContactSampler(matrix, rng)
    batches = sampler.batches()
    while not done:
        waits, pairs = next(batches)
        for wait, (i, j) in zip(waits, pairs):
            t += wait
            if t > t_max:
                truncated = True
                done = True
                break
            events += 1
            a, b = states[i], states[j]
            new_a, new_b = table[a, b]
            if event_log is not None:
                event_log.append((events, t, i + 1, j + 1, NodeState(a).char, NodeState(b).char,
                                  NodeState(new_a).char, NodeState(new_b).char))
            if new_a == a and new_b == b:
                continue
            states[i], states[j] = new_a, new_b
            counts[a] -= 1
            counts[b] -= 1
            counts[new_a] += 1
            counts[new_b] += 1
            if debug:
                _check_event(counts, a, b, new_a, new_b, t1 is not None, difference, events)
            if t1 is None and counts[_ONE] == 0:
                t1 = t
            if _phase_two_done(counts, t1, init):
                if not init.is_draw:
                    t2 = t - t1
                done = True
                break

    final = Configuration(states)
    if final.count(NodeState.ZERO) - final.count(NodeState.ONE) != difference:
        raise AssertionError("Conserved difference violated: final configuration {} for s0={}, s1={}".format(
            final.to_string(), init.s0, init.s1))
    if truncated:
        bc_utils._log("Trial with seed {} truncated at t_max={} after {} events ({})".format(
            seed, t_max, events, "phase 1" if t1 is None else "phase 2"), level=logging.WARNING)
    return TrialOutcome(t1, t2, events, final, truncated, seed)


def _check_event(counts, a, b, new_a, new_b, after_t1, difference, events):
    """
    Per-contact invariants: the conserved difference, count(ONE) never grows and, once phase 1 is over,
    count(E1) never grows

    Raises:
        :AssertionError: on the first violation
    """
    if counts[_ZERO] - counts[_ONE] != difference:
        raise AssertionError("Conserved difference violated at event {}: {} != {}".format(
            events, counts[_ZERO] - counts[_ONE], difference))
    before, after = (a, b), (new_a, new_b)
    if after.count(_ONE) > before.count(_ONE):
        raise AssertionError("count(ONE) increased at event {}".format(events))
    if after_t1 and after.count(_E1) > before.count(_E1):
        raise AssertionError("count(E1) increased after phase 1 at event {}".format(events))


def _phase_two_done(counts, t1, init):
    """
    Returns:
        True when the run is over: phase 1 ended and either no E1 node is left or the initial counts are a draw
    """
    if t1 is None:
        return False
    return init.is_draw or counts[_E1] == 0


def write_trial_log(matrix, init, seed, path=None, t_max=None):
    """
    Simulates one trial and writes its contact log as CSV

    Args:
        :matrix: the ContactMatrix
        :init: the InitSpec
        :seed: the seed of the trial
        :path: the output path, None returns the CSV text
        :t_max: the time horizon

    Returns:
        (outcome, CSV text or None)
    """
    event_log = []
    outcome = simulate_trial(matrix, init, seed, t_max=t_max, event_log=event_log)
    dataframe = pd.DataFrame(event_log, columns=constants.SIMULATION.TRIAL_LOG_COLUMNS)
    text = dataframe.to_csv(path, index=False, float_format=constants.CSV_CONFIG.FLOAT_FORMAT,
                            lineterminator=constants.DELIMITERS.NEWLINE_DELIMITER)
    if path is not None:
        bc_utils._log("Wrote trial log with {} events to {}".format(len(event_log), path))
    return outcome, text

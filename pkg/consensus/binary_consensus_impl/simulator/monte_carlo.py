"""
Monte Carlo harness: independent trials with seeds base_seed + k, optionally spread over a process pool, reduced
in trial index order so that results do not depend on scheduling.
"""

import functools
import logging
import multiprocessing

import numpy as np

from consensus import constants
from consensus.binary_consensus_impl.dao.simulation.monte_carlo_summary import MonteCarloSummary
from consensus.binary_consensus_impl.dao.simulation.survival_curve import SurvivalCurve
from consensus.binary_consensus_impl.simulator import simulator
from consensus.binary_consensus_impl.util import bc_utils


def _trial_worker(seed, matrix, init, t_max, delta):
    """
    Module-level worker so that it can be pickled by the process pool
    """
    return simulator.simulate_trial(matrix, init, seed, t_max=t_max, delta=delta)


def run_trials(matrix, init, trials, base_seed, t_max=None, delta=None, workers=1):
    """
    Runs independent trials

    Args:
        :matrix: the ContactMatrix
        :init: the InitSpec
        :trials: number of trials
        :base_seed: trial k is seeded with base_seed + k
        :t_max: the time horizon of every trial
        :delta: the decay rate of the graph, used for the default horizon
        :workers: number of worker processes, 1 runs in-process

    Returns:
        list of TrialOutcome in trial index order
    """
    seeds = [base_seed + k for k in range(trials)]
    worker = functools.partial(_trial_worker, matrix=matrix, init=init, t_max=t_max, delta=delta)
    if workers <= 1:
        return [worker(seed) for seed in seeds]
    bc_utils._log("Running {} trials on {} worker processes".format(trials, workers))
    with multiprocessing.Pool(workers) as pool:
        return pool.map(worker, seeds)


def _mean_ci(values):
    """
    Args:
        :values: sample values

    Returns:
        (mean, 95% half-width, standard error), None entries where the sample is too small
    """
    if len(values) == 0:
        return None, None, None
    values = np.asarray(values, dtype=np.float64)
    mean = float(values.mean())
    if len(values) < 2:
        return mean, None, None
    stderr = float(values.std(ddof=1) / np.sqrt(len(values)))
    return mean, constants.SIMULATION.CI95_Z * stderr, stderr


def summarize(outcomes, base_seed):
    """
    Aggregates trial outcomes into means and confidence intervals. Trials truncated before the end of a phase are
    excluded from the statistics of that phase, draws never enter the phase 2 statistics.

    Args:
        :outcomes: list of TrialOutcome in index order
        :base_seed: the base seed of the trials

    Returns:
        the MonteCarloSummary
    """
    t1_values = [o.t1 for o in outcomes if o.t1 is not None]
    t2_values = [o.t2 for o in outcomes if o.t2 is not None]
    truncated = sum(1 for o in outcomes if o.truncated)
    draws = sum(1 for o in outcomes if o.t1 is not None and o.t2 is None and not o.truncated)
    mean_t1, ci_t1, stderr_t1 = _mean_ci(t1_values)
    mean_t2, ci_t2, stderr_t2 = _mean_ci(t2_values)
    if truncated:
        bc_utils._log("{} of {} trials were truncated".format(truncated, len(outcomes)), level=logging.WARNING)
    if mean_t2 is None and draws == 0:
        bc_utils._log("No trial completed phase 2, the T2 statistics are unusable", level=logging.WARNING)
    return MonteCarloSummary(len(outcomes), mean_t1, ci_t1, mean_t2, ci_t2, base_seed, truncated=truncated,
                             draws=draws, t2_samples=len(t2_values), stderr_t1=stderr_t1, stderr_t2=stderr_t2)


def run_monte_carlo(matrix, init, trials, base_seed=0, t_max=None, delta=None, workers=1):
    """
    Runs independent trials and summarizes them

    Args:
        :matrix: the ContactMatrix
        :init: the InitSpec
        :trials: number of trials, at least 2
        :base_seed: trial k is seeded with base_seed + k
        :t_max: the time horizon of every trial
        :delta: the decay rate of the graph, used for the default horizon
        :workers: number of worker processes

    Returns:
        the MonteCarloSummary

    Raises:
        :ValueError: if fewer than 2 trials are requested
    """
    if trials < constants.SIMULATION.MIN_TRIALS:
        raise ValueError("At least {} trials are needed for a confidence interval, got: {}".format(
            constants.SIMULATION.MIN_TRIALS, trials))
    outcomes = run_trials(matrix, init, trials, base_seed, t_max=t_max, delta=delta, workers=workers)
    summary = summarize(outcomes, base_seed)
    bc_utils._log("Monte Carlo over {} trials: {}".format(trials, summary))
    return summary


def survival_curve(matrix, init, trials, grid, base_seed=0, t_max=None, delta=None, workers=1):
    """
    Estimates the survival functions of the two phases, P(T1 > t) and P(T1 + T2 > t), over a time grid

    Args:
        :matrix: the ContactMatrix
        :init: the InitSpec
        :trials: number of trials
        :grid: strictly increasing non-negative time points
        :base_seed: trial k is seeded with base_seed + k
        :t_max: the time horizon of every trial
        :delta: the decay rate of the graph, adds the tail bound min(1, n exp(-delta t)) when given
        :workers: number of worker processes

    Returns:
        the SurvivalCurve

    Raises:
        :ValueError: if the grid is empty, negative or not strictly increasing
    """
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != 1 or len(grid) == 0 or grid[0] < 0 or np.any(np.diff(grid) <= 0):
        raise ValueError("The time grid must be non-negative and strictly increasing")
    outcomes = run_trials(matrix, init, trials, base_seed, t_max=t_max, delta=delta, workers=workers)
    # unfinished phases count as surviving forever
    t1 = np.array([np.inf if o.t1 is None else o.t1 for o in outcomes])
    total = np.array([np.inf if o.total_time is None else o.total_time for o in outcomes])
    phase1 = (t1[:, None] > grid[None, :]).mean(axis=0)
    phase2 = (total[:, None] > grid[None, :]).mean(axis=0)
    tail_bound = None
    if delta is not None:
        tail_bound = np.minimum(1.0, matrix.n * np.exp(-delta * grid))
    return SurvivalCurve(grid, phase1, phase2, trials, tail_bound=tail_bound)

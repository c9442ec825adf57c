"""
Contains utility functions shared by the graph, protocol, simulation, spectral and analytics modules
"""

import logging
import math

import numpy as np

from consensus import constants
from consensus.binary_consensus_impl.exceptions.exceptions import InvalidCountsError

_logger = logging.getLogger(constants.LOGGING.LOGGER_NAME)


def _log(x, level=logging.INFO):
    """
    Generic log function, forwards to the library logger

    Args:
        :x: the message to log
        :level: the log level, defaults to INFO

    Returns:
        None
    """
    _logger.log(level, x)


def _validate_counts(n, s0, s1, allow_draw=True):
    """
    Validates initial counts of state 0 and state 1 nodes against the graph size

    Args:
        :n: the number of nodes
        :s0: the initial number of state 0 nodes (the majority)
        :s1: the initial number of state 1 nodes
        :allow_draw: whether s0 == s1 is accepted

    Returns:
        None

    Raises:
        :InvalidCountsError: if the counts are negative, do not sum to n, or state 1 holds the majority
    """
    if s0 < 0 or s1 < 0:
        raise InvalidCountsError("Counts must be non-negative, got s0={}, s1={}".format(s0, s1))
    if s0 + s1 != n:
        raise InvalidCountsError("Counts must sum to the number of nodes: s0={} + s1={} != n={}".format(s0, s1, n))
    if s1 > s0:
        raise InvalidCountsError("State 0 is the majority by convention, relabel the states: s0={} < s1={}"
                                 .format(s0, s1))
    if not allow_draw and s0 == s1:
        raise InvalidCountsError("A strict majority is required, got a draw s0 = s1 = {}".format(s0))


def _alpha(n, s0):
    """
    Returns:
        the fraction of nodes initially holding state 0
    """
    return float(s0) / n


def _validate_alpha(alpha):
    """
    Raises:
        :ValueError: if alpha is outside of (1/2, 1]
    """
    if not (0.5 < alpha <= 1.0):
        raise ValueError("alpha must lie in (1/2, 1], got: {}".format(alpha))


def _harmonic(k):
    """
    Harmonic number H_k by direct summation (in increasing precision order)

    Args:
        :k: non-negative integer

    Returns:
        H_k, with H_0 = 0
    """
    if k < 0:
        raise ValueError("Harmonic numbers are defined for k >= 0, got: {}".format(k))
    if k == 0:
        return 0.0
    if k > constants.ANALYTICS.HARMONIC_DIRECT_SUM_LIMIT:
        return math.log(k) + np.euler_gamma + 1.0 / (2 * k) - 1.0 / (12 * k * k)
    # sum the small terms first
    return float(math.fsum(1.0 / np.arange(k, 0, -1, dtype=np.float64)))


def _ceil_count(alpha, n):
    """
    Rounds alpha * n up to a node count, guarding against floating point noise (0.75 * 100 must give 75)

    Args:
        :alpha: the majority fraction
        :n: the number of nodes

    Returns:
        ceil(alpha * n) as an integer
    """
    return int(math.ceil(round(alpha * n, 9)))

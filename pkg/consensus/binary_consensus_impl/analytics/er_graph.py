"""
The rate function phi(x) = x log(x) + 1 - x of the Erdos-Renyi degree concentration argument and the
convergence-time bound built on its inverse.
"""

import math

from scipy import optimize

from consensus import constants
from consensus.binary_consensus_impl.exceptions.exceptions import AnalyticDomainError
from consensus.binary_consensus_impl.util import bc_utils


def phi(x):
    """
    Args:
        :x: a real in [0, 1]

    Returns:
        x log(x) + 1 - x, with 0 log 0 = 0 so that phi(0) = 1

    Raises:
        :AnalyticDomainError: if x is outside of [0, 1]
    """
    if not 0.0 <= x <= 1.0:
        raise AnalyticDomainError("phi is evaluated on [0, 1], got: {}".format(x))
    if x == 0.0:
        return 1.0
    return x * math.log(x) + 1.0 - x


def phi_inverse(y, tol=constants.ANALYTICS.PHI_BISECTION_TOLERANCE):
    """
    Inverse of phi on [0, 1], where phi decreases strictly from 1 to 0, found by bisection

    Args:
        :y: a real in [0, 1]
        :tol: absolute tolerance on x

    Returns:
        the x in [0, 1] with phi(x) = y

    Raises:
        :AnalyticDomainError: if y is outside of [0, 1]
    """
    if not 0.0 <= y <= 1.0:
        raise AnalyticDomainError("phi^-1 is evaluated on [0, 1], got: {}".format(y))
    if y == 0.0:
        return 1.0
    if y == 1.0:
        return 0.0
    return optimize.bisect(lambda x: phi(x) - y, 0.0, 1.0, xtol=tol)


def er_time_bound(n, c, alpha):
    """
    Bound log(n) / ((2 alpha - 1) phi^{-1}(2 / (c (2 alpha - 1)))) on the expected duration of each phase on an
    Erdos-Renyi graph, without its O(1) term

    Args:
        :n: number of nodes
        :c: the edge-density constant
        :alpha: fraction of state 0 nodes

    Returns:
        the bound

    Raises:
        :AnalyticDomainError: unless c > 2/(2 alpha - 1)
    """
    bc_utils._validate_alpha(alpha)
    margin = 2.0 * alpha - 1.0
    if not c * margin > 2.0:
        raise AnalyticDomainError("The Erdos-Renyi bound needs c > 2/(2 alpha - 1) = {}, got c={}".format(
            2.0 / margin, c))
    return math.log(n) / (margin * phi_inverse(2.0 / (c * margin)))


def er_failure_probability(n, c, alpha, x):
    """
    Chernoff bound 2 (1 - alpha) n exp(-(2 alpha - 1)(n - 1) p_n phi(x / (2 alpha - 1))) on the probability that
    some node outside a subset of size (2 alpha - 1) n has a cut rate of at most x

    Args:
        :n: number of nodes
        :c: the edge-density constant
        :alpha: fraction of state 0 nodes
        :x: the cut-rate threshold, 0 <= x <= 2 alpha - 1

    Returns:
        the bound on the failure probability
    """
    bc_utils._validate_alpha(alpha)
    margin = 2.0 * alpha - 1.0
    p_n = c * math.log(n) / n
    return 2.0 * (1.0 - alpha) * n * math.exp(-margin * (n - 1) * p_n * phi(x / margin))

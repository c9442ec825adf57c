"""
Closed forms of delta(Q, alpha) for the named topologies and the high-probability lower bound for Erdos-Renyi
graphs. Forms taking a real alpha treat (2 alpha - 1) n as integral and do no rounding themselves.
"""

import math

from consensus import constants
from consensus.exceptions import UnknownGraphFamilyError
from consensus.binary_consensus_impl.analytics import er_graph
from consensus.binary_consensus_impl.dao.spectral.spectral_result import SpectralResult
from consensus.binary_consensus_impl.exceptions.exceptions import AnalyticDomainError
from consensus.binary_consensus_impl.util import bc_utils


def closed_form_complete(n, s0, s1):
    """
    Args:
        :n: number of nodes
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes

    Returns:
        delta = min(s0 - s1, n - 1)/(n - 1), which is at least 2 alpha - 1
    """
    bc_utils._validate_counts(n, s0, s1, allow_draw=False)
    return min(s0 - s1, n - 1) / float(n - 1)


def closed_form_path(n, alpha):
    """
    Returns:
        delta = 2 (1 - cos(pi / (4 (1 - alpha) n + 1)))
    """
    bc_utils._validate_alpha(alpha)
    return 2.0 * (1.0 - math.cos(math.pi / (4.0 * (1.0 - alpha) * n + 1.0)))


def path_asymptotic(n, alpha):
    """
    Returns:
        the leading term pi^2 / (16 (1 - alpha)^2 n^2) of closed_form_path
    """
    bc_utils._validate_alpha(alpha)
    if alpha == 1.0:
        raise AnalyticDomainError("The asymptotic form needs a minority, alpha < 1")
    return math.pi ** 2 / (16.0 * (1.0 - alpha) ** 2 * n ** 2)


def closed_form_cycle(n, alpha):
    """
    Returns:
        delta = 2 (1 - cos(pi / (2 (1 - alpha) n + 1)))
    """
    bc_utils._validate_alpha(alpha)
    return 2.0 * (1.0 - math.cos(math.pi / (2.0 * (1.0 - alpha) * n + 1.0)))


def cycle_asymptotic(n, alpha):
    """
    Returns:
        the leading term pi^2 / (4 (1 - alpha)^2 n^2) of closed_form_cycle
    """
    bc_utils._validate_alpha(alpha)
    if alpha == 1.0:
        raise AnalyticDomainError("The asymptotic form needs a minority, alpha < 1")
    return math.pi ** 2 / (4.0 * (1.0 - alpha) ** 2 * n ** 2)


def closed_form_star(n, alpha):
    """
    Args:
        :n: number of nodes, node 1 is the hub
        :alpha: fraction of state 0 nodes

    Returns:
        delta = n / (2 (n - 1)) (1 - sqrt(1 - 4 (2 alpha - 1) / n)), at least (2 alpha - 1)/n

    Raises:
        :AnalyticDomainError: if 4 (2 alpha - 1)/n > 1
    """
    bc_utils._validate_alpha(alpha)
    discriminant = 1.0 - 4.0 * (2.0 * alpha - 1.0) / n
    if discriminant < 0:
        raise AnalyticDomainError("The star closed form needs 4 (2 alpha - 1) / n <= 1, got n={}, alpha={}".format(
            n, alpha))
    return n / (2.0 * (n - 1)) * (1.0 - math.sqrt(discriminant))


def delta_er_bound(n, c, alpha):
    """
    High probability lower bound on delta for Erdos-Renyi graphs, (2 alpha - 1) phi^{-1}(2 / (c (2 alpha - 1))),
    without its O(1/log n) correction

    Args:
        :n: number of nodes (the bound does not depend on it)
        :c: the edge-density constant
        :alpha: fraction of state 0 nodes

    Returns:
        the lower bound

    Raises:
        :AnalyticDomainError: unless c > 2/(2 alpha - 1)
    """
    bc_utils._validate_alpha(alpha)
    margin = 2.0 * alpha - 1.0
    if not c * margin > 2.0:
        raise AnalyticDomainError("The Erdos-Renyi bound needs c > 2/(2 alpha - 1) = {}, got c={}".format(
            2.0 / margin, c))
    return margin * er_graph.phi_inverse(2.0 / (c * margin))


def delta_er_bound_finite(n, c, alpha):
    """
    Finite-n version of delta_er_bound: the argument of phi^{-1} carries the factor
    1 + log(2 (1 - alpha)) / (2 log n) of the sufficient condition

    Raises:
        :AnalyticDomainError: unless alpha < 1 and the corrected argument lies in [0, 1]
    """
    bc_utils._validate_alpha(alpha)
    if alpha == 1.0:
        raise AnalyticDomainError("The finite-n Erdos-Renyi bound needs a minority, alpha < 1")
    margin = 2.0 * alpha - 1.0
    argument = 2.0 / (c * margin) * (1.0 + math.log(2.0 * (1.0 - alpha)) / (2.0 * math.log(n)))
    if not 0.0 <= argument <= 1.0:
        raise AnalyticDomainError("The finite-n Erdos-Renyi argument {} falls outside [0, 1] for n={}, c={}, "
                                  "alpha={}".format(argument, n, c, alpha))
    return margin * er_graph.phi_inverse(argument)


def closed_form_delta(graph_family, n, s0, s1):
    """
    Exact delta from the closed form of a named family, evaluated at alpha = s0/n. Without a minority (s1 = 0)
    Q_S is diagonal and delta is the smallest node rate.

    Args:
        :graph_family: complete, path, cycle or star
        :n: number of nodes
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes

    Returns:
        the SpectralResult, method closed_form

    Raises:
        :UnknownGraphFamilyError: for families without a closed form
    """
    bc_utils._validate_counts(n, s0, s1, allow_draw=False)
    alpha = bc_utils._alpha(n, s0)
    if graph_family == constants.GRAPH.COMPLETE:
        delta = closed_form_complete(n, s0, s1)
    elif s1 == 0:
        rates = {constants.GRAPH.PATH: 1.0, constants.GRAPH.CYCLE: 2.0, constants.GRAPH.STAR: 1.0 / (n - 1)}
        if graph_family not in rates:
            raise UnknownGraphFamilyError("No closed form of delta for the {} family".format(graph_family))
        delta = rates[graph_family]
    elif graph_family == constants.GRAPH.PATH:
        delta = closed_form_path(n, alpha)
    elif graph_family == constants.GRAPH.CYCLE:
        delta = closed_form_cycle(n, alpha)
    elif graph_family == constants.GRAPH.STAR:
        delta = closed_form_star(n, alpha)
    else:
        raise UnknownGraphFamilyError("No closed form of delta for the {} family".format(graph_family))
    return SpectralResult(float(delta), None, constants.SPECTRAL.METHOD_CLOSED_FORM, s0 - s1)

"""
Upper bounds on the expected duration of the two phases, E(T_i) <= (log n + 1)/delta, their per-family
asymptotic forms, and the assembly of analytic reports.
"""

import math

from consensus import constants
from consensus.exceptions import UnknownGraphFamilyError
from consensus.binary_consensus_impl.analytics import complete_graph, star_graph, er_graph
from consensus.binary_consensus_impl.dao.analytics.analytic_report import AnalyticReport
from consensus.binary_consensus_impl.exceptions.exceptions import AnalyticDomainError
from consensus.binary_consensus_impl.spectral import closed_forms
from consensus.binary_consensus_impl.util import bc_utils


def theorem_bound(delta, n):
    """
    Args:
        :delta: the decay rate delta(Q, alpha) of the graph
        :n: number of nodes

    Returns:
        (bound_t1, bound_t2, bound_total) with bound_t1 = bound_t2 = (log n + 1)/delta

    Raises:
        :AnalyticDomainError: if delta is not positive or n < 2
    """
    if not delta > 0:
        raise AnalyticDomainError("The bound needs a positive decay rate, got: {}".format(delta))
    if n < 2:
        raise AnalyticDomainError("The bound needs n >= 2, got: {}".format(n))
    bound = (math.log(n) + 1.0) / delta
    return bound, bound, 2.0 * bound


def family_asymptotic_bound(graph_family, n, alpha, c=None):
    """
    The per-family form of the bound on E(T_i):

        complete: (log n + 1)/(2 alpha - 1)
        path:     16 (1 - alpha)^2 n^2 log(n) / pi^2
        cycle:    4 (1 - alpha)^2 n^2 log(n) / pi^2
        star:     n (log n + 1)/(2 alpha - 1)
        er:       log(n) / ((2 alpha - 1) phi^{-1}(2 / (c (2 alpha - 1))))

    Args:
        :graph_family: the family
        :n: number of nodes
        :alpha: fraction of state 0 nodes
        :c: the edge-density constant of the er family

    Returns:
        the asymptotic bound

    Raises:
        :UnknownGraphFamilyError: if the family has no asymptotic form
        :AnalyticDomainError: if alpha = 1 for path and cycle, or c is missing for er
    """
    bc_utils._validate_alpha(alpha)
    margin = 2.0 * alpha - 1.0
    if graph_family == constants.GRAPH.COMPLETE:
        return (math.log(n) + 1.0) / margin
    if graph_family == constants.GRAPH.STAR:
        return n * (math.log(n) + 1.0) / margin
    if graph_family in (constants.GRAPH.PATH, constants.GRAPH.CYCLE):
        if alpha == 1.0:
            raise AnalyticDomainError("The {} form needs a minority, alpha < 1".format(graph_family))
        factor = 16.0 if graph_family == constants.GRAPH.PATH else 4.0
        return factor * (1.0 - alpha) ** 2 * n ** 2 * math.log(n) / math.pi ** 2
    if graph_family == constants.GRAPH.ER:
        if c is None:
            raise AnalyticDomainError("The er form needs the edge-density constant c")
        return er_graph.er_time_bound(n, c, alpha)
    raise UnknownGraphFamilyError("No asymptotic bound for the {} family".format(graph_family))


def analytic_report(graph_family, n, s0, s1, hub_initial=None, delta=None, c=None):
    """
    Assembles the analytic view of an experiment. Without an explicit delta the family closed form is used (the
    high probability lower bound for er). Exact values of E(T1) exist for the complete graph and, given the initial
    hub state, for the star.

    Args:
        :graph_family: the family
        :n: number of nodes
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes
        :hub_initial: initial state of the star hub, NodeState.ZERO or NodeState.ONE
        :delta: the decay rate, computed from the family when absent
        :c: the edge-density constant of the er family

    Returns:
        the AnalyticReport
    """
    bc_utils._validate_counts(n, s0, s1, allow_draw=False)
    notes = [constants.ANALYTICS.NOTE_THEOREM_BOUND]
    if delta is None:
        if graph_family == constants.GRAPH.ER:
            if c is None:
                raise AnalyticDomainError("The er report needs the edge-density constant c")
            delta = closed_forms.delta_er_bound(n, c, bc_utils._alpha(n, s0))
            notes.append(constants.ANALYTICS.NOTE_ER_PHI_INVERSE_BOUND)
        else:
            delta = closed_forms.closed_form_delta(graph_family, n, s0, s1).delta
            notes.append(constants.ANALYTICS.NOTE_CLOSED_FORM_DELTA)
    bound_t1, bound_t2, _ = theorem_bound(delta, n)
    exact_t1, dominant_term = None, None
    if graph_family == constants.GRAPH.COMPLETE:
        exact_t1 = complete_graph.expected_t1_complete(n, s0, s1)
        notes.append(constants.ANALYTICS.NOTE_HARMONIC_CLOSED_FORM)
        if s1 > 0:
            asymptotics = complete_graph.margin_asymptotics(n, (s0 - s1) / float(n))
            dominant_term = asymptotics.dominant_term
            notes.append(constants.ANALYTICS.NOTE_MARGIN_ASYMPTOTICS)
    elif graph_family == constants.GRAPH.STAR and s1 > 0:
        if hub_initial is not None:
            exact_t1 = star_graph.expected_t1_star(n, s0, s1, hub_initial)
            notes.append(constants.ANALYTICS.NOTE_STAR_MODE_SUM)
        dominant_term = star_graph.star_dominant_term(n, s0)
        notes.append(constants.ANALYTICS.NOTE_STAR_DOMINANT_TERM)
    return AnalyticReport(graph_family, n, s0, s1, delta, bound_t1, bound_t2, exact_t1=exact_t1,
                          dominant_term=dominant_term, notes=notes)

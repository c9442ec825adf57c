"""
Expected duration of the first phase on the star network.

The hub is observed at its contact epochs with the leaves (rate 1, so one time unit per step). Between two
depletions of state 1 (a mode i) the counts are x0 = s0 - i, x1 = s1 - i and xe = n - s0 - s1 + 2i, and the mean
time to the next depletion from hub state s in {0, 1, e} solves the first-step system

    phi_0 = (x0 - 1)/(n - 1) phi_0 + xe/(n - 1) phi_e + 1
    phi_e = x0/(n - 1) phi_0 + (xe - 1)/(n - 1) phi_e + x1/(n - 1) phi_1 + 1
    phi_1 = xe/(n - 1) phi_e + (x1 - 1)/(n - 1) phi_1 + 1

whose solution is

    phi_0 = (n - 1)(n^2 xe + n x0 x1) / (x0 x1 (n - x0)(n + xe))
    phi_1 = (n - 1)(n^2 xe + n x0 x1) / (x0 x1 (n - x1)(n + xe))
    phi_e = (n - 1)(n^2 - x0 x1) / (x0 x1 (n + xe))
"""

import math

import numpy as np
from scipy import linalg

from consensus import constants
from consensus.binary_consensus_impl.dao.analytics.star_mode_state import StarModeState
from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState
from consensus.binary_consensus_impl.exceptions.exceptions import UnsupportedHubStateError, AnalyticDomainError, \
    ModeRangeError
from consensus.binary_consensus_impl.util import bc_utils


def _mode(n, s0, s1, i):
    bc_utils._validate_counts(n, s0, s1)
    return StarModeState(n, s0, s1, i)


def star_hitting_times(n, s0, s1, i):
    """
    Closed forms of the mean time to the next depletion of state 1 in mode i

    Args:
        :n: number of nodes
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes
        :i: the mode, 0 <= i < s1

    Returns:
        (phi_0, phi_1, phi_e), for the hub in state 0, 1 and undecided

    Raises:
        :ModeRangeError: if i is outside of [0, s1)
    """
    mode = _mode(n, s0, s1, i)
    x0, x1, xe = mode.x0, mode.x1, mode.xe
    common = (n - 1) * (n * n * xe + n * x0 * x1) / float(x0 * x1 * (n + xe))
    phi_0 = common / (n - x0)
    phi_1 = common / (n - x1)
    phi_e = (n - 1) * (n * n - x0 * x1) / float(x0 * x1 * (n + xe))
    return phi_0, phi_1, phi_e


def star_hitting_oracle(n, s0, s1, i):
    """
    Solves the first-step system of mode i as a dense linear system, an independent check of star_hitting_times

    Returns:
        (phi_0, phi_1, phi_e)
    """
    mode = _mode(n, s0, s1, i)
    x0, x1, xe = mode.x0, mode.x1, mode.xe
    m = float(n - 1)
    # unknowns ordered (phi_0, phi_e, phi_1)
    system = np.array([
        [1.0 - (x0 - 1) / m, -xe / m, 0.0],
        [-x0 / m, 1.0 - (xe - 1) / m, -x1 / m],
        [0.0, -xe / m, 1.0 - (x1 - 1) / m],
    ])
    phi_0, phi_e, phi_1 = linalg.solve(system, np.ones(3))
    return float(phi_0), float(phi_1), float(phi_e)


def _hub_state(hub_initial):
    if isinstance(hub_initial, str):
        names = {constants.ANALYTICS.HUB_ZERO: NodeState.ZERO, constants.ANALYTICS.HUB_ONE: NodeState.ONE}
        if hub_initial.lower() not in names:
            raise UnsupportedHubStateError("Unknown hub state {}, expected {} or {}".format(
                hub_initial, constants.ANALYTICS.HUB_ZERO, constants.ANALYTICS.HUB_ONE))
        return names[hub_initial.lower()]
    state = NodeState(hub_initial)
    if state not in (NodeState.ZERO, NodeState.ONE):
        raise UnsupportedHubStateError("The hub must start in state 0 or 1, got: {}".format(state.name))
    return state


def star_mode_sum(n, s0, s1):
    """
    Returns:
        sum_{i=1}^{s1-1} phi_e(i), the expected time spent in the modes after the first depletion
    """
    return math.fsum(star_hitting_times(n, s0, s1, i)[2] for i in range(1, s1))


def expected_t1_star(n, s0, s1, hub_initial):
    """
    Exact expected duration of the first phase on the star network, phi_s(0) + sum_{i=1}^{s1-1} phi_e(i) for the
    initial hub state s

    Args:
        :n: number of nodes
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes, at least 1
        :hub_initial: NodeState.ZERO or NodeState.ONE (or "zero" / "one")

    Returns:
        the expected duration

    Raises:
        :UnsupportedHubStateError: if the hub starts undecided
        :ModeRangeError: if there is no state 1 node
    """
    hub = _hub_state(hub_initial)
    if s1 < 1:
        raise ModeRangeError("The first phase on the star needs s1 >= 1, got: {}".format(s1))
    if hub == NodeState.ZERO and s0 < 1:
        raise UnsupportedHubStateError("The hub cannot start in state 0 without state 0 nodes")
    phi_0, phi_1, _ = star_hitting_times(n, s0, s1, 0)
    first = phi_0 if hub == NodeState.ZERO else phi_1
    return first + star_mode_sum(n, s0, s1)


def star_dominant_term(n, s0):
    """
    Returns:
        n log(n) / ((2 alpha - 1)(3 - 2 alpha)), the growth of the mode sum

    Raises:
        :AnalyticDomainError: at a draw
    """
    alpha = bc_utils._alpha(n, s0)
    if alpha <= 0.5:
        raise AnalyticDomainError("The star dominant term needs a strict majority, got alpha={}".format(alpha))
    return n * math.log(n) / ((2.0 * alpha - 1.0) * (3.0 - 2.0 * alpha))


def star_mode_sum_harmonic(n, s0, s1):
    """
    The mode sum by partial fractions, with alpha = s0/n:

        (n - 1)/((2a - 1)(3 - 2a)) H_{s1-1} - (n - 1)/((2a - 1)(1 + 2a)) (H_{s0-1} - H_{s0-s1})
            + (4/((3 - 2a)(1 + 2a)) - 1) sum_{i=1}^{s1-1} (n - 1)/(n + 2i)

    Returns:
        sum_{i=1}^{s1-1} phi_e(i)

    Raises:
        :AnalyticDomainError: at a draw
    """
    bc_utils._validate_counts(n, s0, s1)
    if s0 == s1:
        raise AnalyticDomainError("The harmonic decomposition needs a strict majority, got a draw")
    if s1 <= 1:
        return 0.0
    a = bc_utils._alpha(n, s0)
    margin = 2.0 * a - 1.0
    minority_term = (n - 1) / (margin * (3.0 - 2.0 * a)) * bc_utils._harmonic(s1 - 1)
    majority_term = (n - 1) / (margin * (1.0 + 2.0 * a)) * (bc_utils._harmonic(s0 - 1)
                                                           - bc_utils._harmonic(s0 - s1))
    i = np.arange(1, s1, dtype=np.float64)
    growth_term = (4.0 / ((3.0 - 2.0 * a) * (1.0 + 2.0 * a)) - 1.0) * math.fsum((n - 1) / (n + 2.0 * i))
    return minority_term - majority_term + growth_term

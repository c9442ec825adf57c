"""
Expected duration of the first phase on the complete graph.

With s0 - i nodes in state 0 and s1 - i nodes in state 1 after i depletions, the next depletion happens at rate
mu_i = (s0 - i)(s1 - i)/(n - 1), the minimum of the exponential clocks of the (0, 1) pairs. Summing the epoch
means gives

    E(T1) = (n - 1) sum_{i=0}^{s1-1} 1/((s0 - i)(s1 - i)) = (n - 1)/(s0 - s1) (H_{s1} + H_{s0-s1} - H_{s0})
"""

import math

import numpy as np
from scipy import linalg

from consensus import constants
from consensus.binary_consensus_impl.dao.analytics.margin_asymptotics import MarginAsymptotics
from consensus.binary_consensus_impl.util import bc_utils


def depletion_rates(n, s0, s1):
    """
    Returns:
        numpy array of the rates mu_i = (s0 - i)(s1 - i)/(n - 1), i = 0..s1-1
    """
    i = np.arange(s1, dtype=np.float64)
    return (s0 - i) * (s1 - i) / (n - 1)


def epoch_sum(n, s0, s1):
    """
    Returns:
        E(T1) as the direct sum of the epoch means (n - 1) sum_i 1/((s0 - i)(s1 - i))
    """
    bc_utils._validate_counts(n, s0, s1)
    if s1 == 0:
        return 0.0
    return math.fsum(1.0 / depletion_rates(n, s0, s1))


def harmonic_form(n, s0, s1):
    """
    Returns:
        E(T1) as (n - 1)/(s0 - s1) (H_{s1} + H_{s0-s1} - H_{s0}), defined for s0 > s1
    """
    bc_utils._validate_counts(n, s0, s1, allow_draw=False)
    return (n - 1) / float(s0 - s1) * (bc_utils._harmonic(s1) + bc_utils._harmonic(s0 - s1)
                                       - bc_utils._harmonic(s0))


def expected_t1_complete(n, s0, s1):
    """
    Exact expected duration of the first phase on the complete graph

    Args:
        :n: number of nodes
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes

    Returns:
        the harmonic closed form for s0 > s1, the epoch sum at a draw

    Raises:
        :InvalidCountsError: if the counts do not sum to n or state 1 holds the majority
    """
    bc_utils._validate_counts(n, s0, s1)
    if s0 == s1:
        return epoch_sum(n, s0, s1)
    return harmonic_form(n, s0, s1)


def lumped_chain_t1_oracle(n, s0, s1):
    """
    Mean absorption time of the lumped chain of depletion counts i = 0..s1 by first-step analysis:
    mu_i h_i - mu_i h_{i+1} = 1 for i < s1 and h_{s1} = 0, solved as a dense linear system

    Returns:
        h_0
    """
    bc_utils._validate_counts(n, s0, s1)
    if s1 == 0:
        return 0.0
    rates = depletion_rates(n, s0, s1)
    size = s1 + 1
    system = np.zeros((size, size))
    rhs = np.zeros(size)
    idx = np.arange(s1)
    system[idx, idx] = rates
    system[idx, idx + 1] = -rates
    rhs[:s1] = 1.0
    system[s1, s1] = 1.0
    return float(linalg.solve(system, rhs)[0])


def draw_asymptote(n):
    """
    Returns:
        the growth (pi^2 / 6) n of E(T1) at a draw s0 = s1 = n/2
    """
    return math.pi ** 2 / 6.0 * n


def margin_asymptotics(n, mu):
    """
    Scaling of E(T1) on the complete graph with the voting margin mu = (s0 - s1)/n: (1/mu) log(n mu) + O(1), which
    is linear in n for mu of order 1/n, logarithmic for a constant margin and ((1 - a)/2) n^a log(n) for
    mu = n^(-a)

    Args:
        :n: number of nodes
        :mu: the voting margin, 0 < mu <= 1 and n mu >= 1

    Returns:
        the MarginAsymptotics

    Raises:
        :ValueError: if the margin is outside of its range
    """
    if not 0.0 < mu <= 1.0 or n * mu < 1.0 - 1e-12:
        raise ValueError("The voting margin must satisfy 0 < mu <= 1 and n mu >= 1, got n={}, mu={}".format(n, mu))
    log_term = math.log(n * mu) / mu
    if n * mu <= 1.0 + 1e-12:
        return MarginAsymptotics(n, mu, log_term, constants.ANALYTICS.REGIME_LINEAR, float(n), exponent=1.0)
    if mu >= 1.0 / math.log(n):
        return MarginAsymptotics(n, mu, log_term, constants.ANALYTICS.REGIME_LOGARITHMIC, math.log(n) / mu,
                                 exponent=0.0)
    a = -math.log(mu) / math.log(n)
    return MarginAsymptotics(n, mu, log_term, constants.ANALYTICS.REGIME_POWER_LAW,
                             (1.0 - a) / 2.0 * n ** a * math.log(n), exponent=a)

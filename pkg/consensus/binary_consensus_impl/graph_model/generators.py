"""
Generators of contact-rate matrices for the named topologies, with the rate normalizations:

    - complete graph: every pair at rate 1/(n-1), each node has total rate 1
    - path and cycle: every edge at rate 1
    - star: hub (node 1) to each leaf at rate 1/(n-1), the hub has total rate 1
    - Erdos-Renyi: each pair is an edge with probability p_n = c log(n)/n, edges at rate 1/((n-1) p_n)
"""

import logging

import networkx as nx
import numpy as np

from consensus import constants
from consensus.binary_consensus_impl.dao.graphs.contact_matrix import ContactMatrix
from consensus.binary_consensus_impl.exceptions.exceptions import InvalidGraphSizeError, GraphGenerationError
from consensus.binary_consensus_impl.util import bc_utils


def _validate_size(n, minimum, family):
    """
    Raises:
        :InvalidGraphSizeError: if n is below the family minimum or above the dense storage cap
    """
    if int(n) != n or n < minimum:
        raise InvalidGraphSizeError("A {} graph needs an integer n >= {}, got: {}".format(family, minimum, n))
    if n > constants.GRAPH.MAX_DENSE_N:
        raise InvalidGraphSizeError("Generators refuse n > {} (dense storage), got: {}".format(
            constants.GRAPH.MAX_DENSE_N, n))


def from_networkx(graph, rate=1.0, family=None):
    """
    Converts an undirected networkx graph into a contact matrix, nodes are taken in sorted order

    Args:
        :graph: the networkx graph
        :rate: the rate of every edge, or None to use the `weight` edge attribute
        :family: the family tag

    Returns:
        the ContactMatrix
    """
    nodes = sorted(graph.nodes())
    if rate is None:
        rates = nx.to_numpy_array(graph, nodelist=nodes, weight="weight")
    else:
        rates = nx.to_numpy_array(graph, nodelist=nodes, weight=None) * rate
    return ContactMatrix(rates, family=family)


def complete_graph(n):
    """
    Args:
        :n: number of nodes, n >= 2

    Returns:
        the complete graph with q_{i,j} = 1/(n-1) for all i != j
    """
    _validate_size(n, 2, constants.GRAPH.COMPLETE)
    rates = np.full((n, n), 1.0 / (n - 1))
    np.fill_diagonal(rates, 0.0)
    return ContactMatrix(rates, family=constants.GRAPH.COMPLETE)


def path_graph(n):
    """
    Args:
        :n: number of nodes, n >= 2

    Returns:
        the path 1 - 2 - ... - n with unit edge rates
    """
    _validate_size(n, 2, constants.GRAPH.PATH)
    return from_networkx(nx.path_graph(n), rate=1.0, family=constants.GRAPH.PATH)


def cycle_graph(n):
    """
    Args:
        :n: number of nodes, n >= 3

    Returns:
        the cycle 1 - 2 - ... - n - 1 with unit edge rates
    """
    _validate_size(n, 3, constants.GRAPH.CYCLE)
    return from_networkx(nx.cycle_graph(n), rate=1.0, family=constants.GRAPH.CYCLE)


def star_graph(n):
    """
    Args:
        :n: number of nodes, n >= 2, node 1 is the hub

    Returns:
        the star with hub-leaf rates 1/(n-1)
    """
    _validate_size(n, 2, constants.GRAPH.STAR)
    # networkx star_graph(k) has k leaves around hub 0
    return from_networkx(nx.star_graph(n - 1), rate=1.0 / (n - 1), family=constants.GRAPH.STAR)


def erdos_renyi_graph(params, max_attempts=constants.GRAPH.ER_MAX_ATTEMPTS):
    """
    Samples an Erdos-Renyi contact matrix, resampling with incremented sub-seeds until the graph is connected

    Args:
        :params: the ErParams (n, c, seed)
        :max_attempts: the resampling budget

    Returns:
        the ContactMatrix, with every positive rate equal to 1/((n-1) p_n)

    Raises:
        :GraphGenerationError: if no connected sample was found within the budget
    """
    _validate_size(params.n, 2, constants.GRAPH.ER)
    for attempt in range(max_attempts):
        graph = nx.gnp_random_graph(params.n, params.p_n, seed=params.seed + attempt)
        if nx.is_connected(graph):
            if attempt > 0:
                bc_utils._log("Erdos-Renyi sample connected after {} resamples ({})".format(attempt, params))
            return from_networkx(graph, rate=params.edge_rate, family=constants.GRAPH.ER)
        bc_utils._log("Erdos-Renyi sample {} of {} is disconnected, resampling".format(attempt + 1, params),
                      level=logging.DEBUG)
    raise GraphGenerationError("Could not sample a connected Erdos-Renyi graph for {} in {} attempts".format(
        params, max_attempts), attempts=max_attempts)


def node_degrees(matrix):
    """
    Returns:
        the total contact rate q_i = sum_l q_{i,l} of every node, as a numpy array
    """
    return np.array(matrix.degrees)


def to_networkx(matrix):
    return matrix.to_networkx()

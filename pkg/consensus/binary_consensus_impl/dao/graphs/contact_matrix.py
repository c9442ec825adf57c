import networkx as nx
import numpy as np

from consensus import constants
from consensus.binary_consensus_impl.exceptions.exceptions import InvalidGraphSizeError, DisconnectedGraphError, \
    EdgeListConsistencyError


class ContactMatrix(object):
    """
    Represents the symmetric contact-rate matrix Q of a graph: pair (i, j) interacts at the instants of a Poisson
    process with rate q_{i,j}. Immutable after construction.
    """

    def __init__(self, rates, family=None):
        """
        Initialize the contact matrix from a dense n x n array of rates and validate it

        Args:
            :rates: n x n array-like of non-negative contact rates
            :family: the graph family tag (complete, path, cycle, star, er, file), optional

        Raises:
            :InvalidGraphSizeError: if the matrix is not square, has fewer than 2 nodes or exceeds the dense cap
            :EdgeListConsistencyError: if the matrix is asymmetric, has a non-zero diagonal or negative rates
            :DisconnectedGraphError: if the graph induced by the positive rates is not connected
        """
        rates = np.array(rates, dtype=np.float64)
        if rates.ndim != 2 or rates.shape[0] != rates.shape[1]:
            raise InvalidGraphSizeError("The contact matrix must be square, got shape: {}".format(rates.shape))
        n = rates.shape[0]
        if n < 2:
            raise InvalidGraphSizeError("The contact matrix needs at least 2 nodes, got: {}".format(n))
        if n > constants.GRAPH.MAX_DENSE_N:
            raise InvalidGraphSizeError("Dense contact matrices are limited to {} nodes, got: {}"
                                        .format(constants.GRAPH.MAX_DENSE_N, n))
        if np.any(rates < 0) or not np.all(np.isfinite(rates)):
            raise EdgeListConsistencyError("Contact rates must be finite and non-negative")
        if np.any(np.diag(rates) != 0):
            raise EdgeListConsistencyError("Contact rates must have a zero diagonal")
        if not np.array_equal(rates, rates.T):
            raise EdgeListConsistencyError("Contact rates must be symmetric")
        graph = nx.from_numpy_array(rates)
        if not nx.is_connected(graph):
            raise DisconnectedGraphError("The graph induced by the contact rates is not connected, "
                                         "components: {}".format(nx.number_connected_components(graph)))
        rates.setflags(write=False)
        self.n = n
        self.rates = rates
        self.family = family
        self.degrees = rates.sum(axis=1)
        self.degrees.setflags(write=False)
        upper_i, upper_j = np.nonzero(np.triu(rates, k=1))
        self.edges = np.stack([upper_i, upper_j], axis=1)
        self.edges.setflags(write=False)
        self.edge_rates = rates[upper_i, upper_j]
        self.edge_rates.setflags(write=False)
        self.total_rate = float(self.edge_rates.sum())

    @property
    def number_of_edges(self):
        return int(self.edges.shape[0])

    def rate(self, i, j):
        """
        Args:
            :i: 1-based node index
            :j: 1-based node index

        Returns:
            the contact rate q_{i,j}
        """
        return float(self.rates[i - 1, j - 1])

    def to_networkx(self):
        """
        Returns:
            an undirected networkx graph with a `weight` attribute holding the contact rate of each edge
        """
        return nx.from_numpy_array(self.rates)

    def is_vertex_transitive(self):
        return self.family in constants.GRAPH.VERTEX_TRANSITIVE_FAMILIES

    def __eq__(self, other):
        return isinstance(other, ContactMatrix) and np.array_equal(self.rates, other.rates)

    def __hash__(self):
        return hash(self.rates.tobytes())

    def __repr__(self):
        return "ContactMatrix(n={}, edges={}, family={})".format(self.n, self.number_of_edges, self.family)

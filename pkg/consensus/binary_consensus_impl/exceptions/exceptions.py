"""
Exceptions thrown by the binary interval consensus toolkit
"""


class InvalidGraphSizeError(Exception):
    """This exception will be raised if a graph generator is asked for an unsupported number of nodes"""


class GraphGenerationError(Exception):
    """
    This exception will be raised if a random graph generator could not produce a connected graph
    within its resampling budget
    """

    def __init__(self, message, attempts):
        super(GraphGenerationError, self).__init__(message)
        self.attempts = attempts


class EdgeListParseError(Exception):
    """This exception will be raised if a line of an edge-list file cannot be parsed"""

    def __init__(self, message, line_number):
        super(EdgeListParseError, self).__init__("line {}: {}".format(line_number, message))
        self.line_number = line_number


class EdgeListConsistencyError(Exception):
    """
    This exception will be raised if an edge-list describes an asymmetric matrix, repeats an unordered pair
    or references nodes outside of 1..n
    """


class DisconnectedGraphError(Exception):
    """This exception will be raised if the graph induced by a contact-rate matrix is not connected"""


class InvalidInitSpecError(Exception):
    """This exception will be raised if an initial state specification does not fit the graph"""


class InvalidSubsetError(Exception):
    """This exception will be raised if a node subset is empty or references nodes outside of the graph"""


class EigenSolverError(Exception):
    """This exception will be raised if the symmetric eigensolver does not converge to the requested tolerance"""

    def __init__(self, message, residual):
        super(EigenSolverError, self).__init__(message)
        self.residual = residual


class EnumerationGuardError(Exception):
    """
    This exception will be raised if an exhaustive subset enumeration is requested for a graph that is too large,
    callers should fall back to closed forms or subset sampling
    """


class AnalyticDomainError(Exception):
    """This exception will be raised if an analytic formula is evaluated outside of the range where it holds"""


class ModeRangeError(Exception):
    """This exception will be raised if a star-network mode index lies outside of 0 <= i < s1"""


class UnsupportedHubStateError(Exception):
    """This exception will be raised if the star hitting-time chain is started with an undecided hub"""


class InvalidCountsError(Exception):
    """
    This exception will be raised if the initial counts of state 0 and state 1 nodes are inconsistent,
    the convention is that state 0 holds the (weak) majority
    """

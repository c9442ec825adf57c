"""
Loader of contact-rate matrices from the edge-list text format:

    first line: n
    other lines: i j rate     (1 <= i < j <= n, rate > 0, one line per unordered pair)

Lines starting with `#` and blank lines are ignored.
"""

import numpy as np

from consensus import constants
from consensus.binary_consensus_impl.dao.graphs.contact_matrix import ContactMatrix
from consensus.binary_consensus_impl.exceptions.exceptions import EdgeListParseError, EdgeListConsistencyError
from consensus.binary_consensus_impl.util import bc_utils


def _content_lines(text):
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(constants.GRAPH.EDGE_LIST_COMMENT):
            continue
        yield line_number, stripped


def _parse_n(line_number, line):
    try:
        n = int(line)
    except ValueError:
        raise EdgeListParseError("expected the number of nodes, got: {!r}".format(line), line_number)
    if n < 2:
        raise EdgeListParseError("the number of nodes must be at least 2, got: {}".format(n), line_number)
    if n > constants.GRAPH.MAX_DENSE_N:
        raise EdgeListParseError("the number of nodes must be at most {}, got: {}".format(
            constants.GRAPH.MAX_DENSE_N, n), line_number)
    return n


def _parse_edge(line_number, line, n):
    fields = line.split()
    if len(fields) != 3:
        raise EdgeListParseError("expected 'i j rate', got: {!r}".format(line), line_number)
    try:
        i, j, rate = int(fields[0]), int(fields[1]), float(fields[2])
    except ValueError:
        raise EdgeListParseError("could not parse 'i j rate' from: {!r}".format(line), line_number)
    if not (1 <= i < j <= n):
        raise EdgeListParseError("node indices must satisfy 1 <= i < j <= {}, got: {} {}".format(n, i, j),
                                 line_number)
    if not (rate > 0 and np.isfinite(rate)):
        raise EdgeListParseError("the rate must be a positive finite number, got: {}".format(fields[2]),
                                 line_number)
    return i, j, rate


def load_edge_list(text, family=constants.GRAPH.FILE):
    """
    Parses an edge-list into a contact matrix and validates it

    Args:
        :text: the edge-list contents
        :family: the family tag of the resulting matrix

    Returns:
        the ContactMatrix

    Raises:
        :EdgeListParseError: if a line cannot be parsed, the error carries the line number
        :EdgeListConsistencyError: if an unordered pair appears twice
        :DisconnectedGraphError: if the resulting graph is not connected
    """
    lines = _content_lines(text)
    try:
        line_number, line = next(lines)
    except StopIteration:
        raise EdgeListParseError("the edge-list is empty", 1)
    n = _parse_n(line_number, line)
    rates = np.zeros((n, n))
    seen = {}
    for line_number, line in lines:
        i, j, rate = _parse_edge(line_number, line, n)
        if (i, j) in seen:
            raise EdgeListConsistencyError("line {}: the pair ({}, {}) was already given on line {}".format(
                line_number, i, j, seen[(i, j)]))
        seen[(i, j)] = line_number
        rates[i - 1, j - 1] = rate
        rates[j - 1, i - 1] = rate
    bc_utils._log("Parsed edge-list with n={} and {} edges".format(n, len(seen)))
    return ContactMatrix(rates, family=family)


def load_edge_list_file(path):
    """
    Reads an UTF-8 edge-list file and parses it, see load_edge_list
    """
    with open(path, "r", encoding="utf8") as f:
        return load_edge_list(f.read())


def dump_edge_list(matrix):
    """
    Serializes a contact matrix in the edge-list format

    Args:
        :matrix: the ContactMatrix

    Returns:
        the edge-list text
    """
    lines = [str(matrix.n)]
    for (i, j), rate in zip(matrix.edges, matrix.edge_rates):
        lines.append("{} {} {!r}".format(i + 1, j + 1, float(rate)))
    return constants.DELIMITERS.NEWLINE_DELIMITER.join(lines) + constants.DELIMITERS.NEWLINE_DELIMITER

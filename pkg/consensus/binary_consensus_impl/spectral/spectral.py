"""
The decay rate delta(Q, alpha) = min |lambda_{Q_S}| over the subsets S with |S| = s0 - s1.

The spectrum of Q_S is the killed diagonal {-q_i : i in S} together with the spectrum of the symmetric principal
submatrix M_S on the complement of S, so lambda_{Q_S} = max(max_{i in S} -q_i, lambda_max(M_S)). Exhaustive
enumeration evaluates M_S for all subsets of a size in chunks of stacked matrices.
"""

import itertools
import math

import numpy as np

from consensus import constants, util
from consensus.binary_consensus_impl.dao.spectral.killed_matrix import KilledMatrix
from consensus.binary_consensus_impl.dao.spectral.spectral_result import SpectralResult
from consensus.binary_consensus_impl.dao.spectral.subset_mask import SubsetMask
from consensus.binary_consensus_impl.exceptions.exceptions import InvalidSubsetError, EnumerationGuardError, \
    InvalidCountsError
from consensus.binary_consensus_impl.spectral import eigensolver
from consensus.binary_consensus_impl.util import bc_utils


def _generator(matrix):
    """
    Returns:
        Q with the diagonal replaced by -q_i
    """
    generator = np.array(matrix.rates, dtype=np.float64)
    np.fill_diagonal(generator, -matrix.degrees)
    return generator


def build_qs(matrix, subset):
    """
    Builds Q_S: rows in S keep only the diagonal -q_i, rows in the complement keep q_{i,j} off the diagonal and
    -q_i on it

    Args:
        :matrix: the ContactMatrix
        :subset: the SubsetMask S

    Returns:
        the KilledMatrix

    Raises:
        :InvalidSubsetError: if S is empty or does not fit the graph
    """
    if subset.n != matrix.n:
        raise InvalidSubsetError("Subset over {} nodes does not fit a graph of {} nodes".format(subset.n, matrix.n))
    if subset.is_empty():
        raise InvalidSubsetError("Q_S is defined for non-empty subsets only")
    entries = _generator(matrix)
    killed = subset.indices
    entries[killed, :] = 0.0
    entries[killed, killed] = -matrix.degrees[killed]
    return KilledMatrix(entries, subset, np.array(matrix.degrees))


def dominant_eigenvalue(qs, solver=constants.SPECTRAL.SOLVER_LAPACK):
    """
    Largest eigenvalue of Q_S

    Args:
        :qs: the KilledMatrix
        :solver: eigensolver of M_S, lapack or jacobi

    Returns:
        lambda_{Q_S} = max(max_{i in S} -q_i, lambda_max(M_S)), strictly negative on a connected graph

    Raises:
        :EigenSolverError: if the eigenpair of M_S fails its residual check
    """
    value = float(qs.killed_diagonal().max())
    principal = qs.principal_submatrix()
    if principal.shape[0] > 0:
        top, _ = eigensolver.dominant_eigenpair(principal, solver=solver)
        value = max(value, top)
    return value


def _subset_size(n, s0, s1):
    if s0 + s1 != n:
        raise InvalidCountsError("Counts must sum to the number of nodes: s0={} + s1={} != n={}".format(s0, s1, n))
    if not s0 > s1 >= 0:
        raise InvalidCountsError("delta is defined for a strict majority s0 > s1 >= 0, got s0={}, s1={}".format(
            s0, s1))
    return s0 - s1


def _guard(n):
    max_n = util.max_enumeration_n()
    if n > max_n:
        raise EnumerationGuardError("Exhaustive enumeration is limited to n <= {} (set {} to override), got n={}; "
                                    "use the closed forms or the sampled method".format(
                                        max_n, constants.ENV_VARIABLES.MAX_N_ENV_VAR, n))


def _subset_chunks(n, size, anchored, chunk=constants.SPECTRAL.ENUMERATION_CHUNK):
    """
    Yields the subsets of a given size in lexicographic order as arrays of shape (batch, size) of 0-based indices.
    Anchored enumeration keeps only the subsets containing node 0.
    """
    if anchored:
        combinations = ((0,) + rest for rest in itertools.combinations(range(1, n), size - 1))
    else:
        combinations = itertools.combinations(range(n), size)
    while True:
        block = list(itertools.islice(combinations, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), size)


def _evaluate_chunk(generator, degrees, members):
    """
    Args:
        :generator: Q with -q_i on the diagonal
        :degrees: the node rates q_i
        :members: array (batch, size) of subsets

    Returns:
        array (batch,) of lambda_{Q_S}
    """
    batch, size = members.shape
    n = generator.shape[0]
    values = -degrees[members].min(axis=1)
    if size == n:
        return values
    keep = np.ones((batch, n), dtype=bool)
    keep[np.arange(batch)[:, None], members] = False
    m = n - size
    complement = np.nonzero(keep)[1].reshape(batch, m)
    step = max(1, constants.SPECTRAL.EIGH_BATCH_BYTES // (m * m * 8))
    for start in range(0, batch, step):
        rows = complement[start:start + step]
        stack = generator[rows[:, :, None], rows[:, None, :]]
        values[start:start + step] = np.maximum(values[start:start + step],
                                                eigensolver.batched_dominant_eigenvalues(stack))
    return values


def _min_over_size(matrix, size, anchored):
    generator = _generator(matrix)
    degrees = np.asarray(matrix.degrees)
    best, best_members, evaluated = math.inf, None, 0
    for members in _subset_chunks(matrix.n, size, anchored):
        magnitudes = -_evaluate_chunk(generator, degrees, members)
        k = int(np.argmin(magnitudes))
        evaluated += len(members)
        if magnitudes[k] < best:
            best, best_members = float(magnitudes[k]), members[k]
    return best, SubsetMask.from_members([int(m) + 1 for m in best_members], matrix.n), evaluated


def delta_exhaustive(matrix, s0, s1, prune=True):
    """
    delta(Q, alpha) by exhaustive minimization of |lambda_{Q_S}| over all subsets with |S| = s0 - s1. On vertex
    transitive families (complete, cycle) only subsets containing node 1 are evaluated, one per orbit class.

    Args:
        :matrix: the ContactMatrix
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes
        :prune: restrict vertex transitive families to subsets containing node 1

    Returns:
        the SpectralResult, method exhaustive

    Raises:
        :InvalidCountsError: if the counts are not a strict majority over the graph
        :EnumerationGuardError: if n exceeds the enumeration guard
    """
    size = _subset_size(matrix.n, s0, s1)
    _guard(matrix.n)
    anchored = prune and matrix.is_vertex_transitive()
    bc_utils._log("Enumerating subsets of size {} over n={} nodes ({} subsets{})".format(
        size, matrix.n, math.comb(matrix.n, size), ", anchored at node 1" if anchored else ""))
    delta, subset, evaluated = _min_over_size(matrix, size, anchored)
    return SpectralResult(delta, subset, constants.SPECTRAL.METHOD_EXHAUSTIVE, size, evaluated=evaluated)


def delta_range_min(matrix, s0, s1, prune=True):
    """
    Minimum of |lambda_{Q_S}| over every subset size from s0 - s1 to s0. By interlacing it equals the minimum at
    the single size s0 - s1.

    Returns:
        the SpectralResult, method exhaustive, subset_size is the size of the minimizer
    """
    smallest = _subset_size(matrix.n, s0, s1)
    _guard(matrix.n)
    anchored = prune and matrix.is_vertex_transitive()
    best = None
    evaluated = 0
    for size in range(smallest, s0 + 1):
        delta, subset, count = _min_over_size(matrix, size, anchored)
        evaluated += count
        if best is None or delta < best[0]:
            best = (delta, subset, size)
    return SpectralResult(best[0], best[1], constants.SPECTRAL.METHOD_EXHAUSTIVE, best[2], evaluated=evaluated)


def delta_sampled(matrix, s0, s1, samples=constants.SPECTRAL.DEFAULT_SAMPLES, seed=0):
    """
    Minimum of |lambda_{Q_S}| over uniformly sampled subsets with |S| = s0 - s1. The minimum over a sample is an
    upper estimate of delta, never a certified value.

    Args:
        :matrix: the ContactMatrix
        :s0: initial number of state 0 nodes
        :s1: initial number of state 1 nodes
        :samples: number of sampled subsets
        :seed: the sampling seed

    Returns:
        the SpectralResult, method sampled
    """
    size = _subset_size(matrix.n, s0, s1)
    if samples < 1:
        raise ValueError("The number of samples must be positive, got: {}".format(samples))
    rng = np.random.Generator(np.random.Philox(seed))
    generator = _generator(matrix)
    degrees = np.asarray(matrix.degrees)
    best, best_members = math.inf, None
    for start in range(0, samples, constants.SPECTRAL.ENUMERATION_CHUNK):
        batch = min(constants.SPECTRAL.ENUMERATION_CHUNK, samples - start)
        members = np.sort(rng.permuted(np.tile(np.arange(matrix.n), (batch, 1)), axis=1)[:, :size], axis=1)
        magnitudes = -_evaluate_chunk(generator, degrees, members)
        k = int(np.argmin(magnitudes))
        if magnitudes[k] < best:
            best, best_members = float(magnitudes[k]), members[k]
    bc_utils._log("Sampled {} subsets of size {}: delta <= {} (upper estimate)".format(samples, size, best))
    subset = SubsetMask.from_members([int(m) + 1 for m in best_members], matrix.n) \
        if matrix.n <= constants.SPECTRAL.MAX_MASK_BITS else None
    return SpectralResult(best, subset, constants.SPECTRAL.METHOD_SAMPLED, size, evaluated=samples)


def cut_rate_bound(matrix, subset):
    """
    Upper bound on lambda_{Q_S} from the quadratic form of M_S: lambda_max(M_S) <= -min_{i not in S} sum_{j in S}
    q_{i,j}, combined with the killed diagonal

    Returns:
        max(max_{i in S} -q_i, -min_{i not in S} sum_{j in S} q_{i,j})
    """
    qs = build_qs(matrix, subset)
    bound = float(qs.killed_diagonal().max())
    complement = subset.complement_indices
    if complement:
        cut = np.asarray(matrix.rates)[np.ix_(complement, subset.indices)].sum(axis=1)
        bound = max(bound, -float(cut.min()))
    return bound


def tridiagonal_eigenvalues(m, kind=constants.SPECTRAL.TRIDIAGONAL_BOTH_ENDS):
    """
    Eigenvalues of the m x m tridiagonal matrices with unit off-diagonals and diagonal -2, except, for the one_end
    kind, a last diagonal entry of -1:

        both_ends: lambda_k = -2 (1 - cos(pi k / (m + 1)))
        one_end:   kappa_k = -2 (1 - cos((2k - 1) pi / (2m + 1)))

    Args:
        :m: the dimension
        :kind: both_ends or one_end

    Returns:
        numpy array of the m eigenvalues, k = 1..m
    """
    k = np.arange(1, m + 1, dtype=np.float64)
    if kind == constants.SPECTRAL.TRIDIAGONAL_BOTH_ENDS:
        return -2.0 * (1.0 - np.cos(np.pi * k / (m + 1)))
    if kind == constants.SPECTRAL.TRIDIAGONAL_ONE_END:
        return -2.0 * (1.0 - np.cos((2 * k - 1) * np.pi / (2 * m + 1)))
    raise ValueError("Unknown tridiagonal kind: {}".format(kind))

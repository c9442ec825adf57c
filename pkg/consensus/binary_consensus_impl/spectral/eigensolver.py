"""
Dense symmetric eigensolvers for the principal submatrices M_S.

Two solvers are available: LAPACK through numpy.linalg.eigh (the default, it also works on stacks of matrices)
and a cyclic Jacobi rotation solver, used to cross-check small problems. Every dominant eigenpair is verified with
the residual ||M x - lambda x|| <= 1e-10 ||M||.
"""

import numpy as np

from consensus import constants
from consensus.binary_consensus_impl.exceptions.exceptions import EigenSolverError


def _check_symmetric(a):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("Expected a square matrix, got shape: {}".format(a.shape))
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-14 * max(1.0, np.abs(a).max())):
        raise ValueError("Expected a symmetric matrix")


def jacobi_eigh(matrix, tol=constants.SPECTRAL.JACOBI_TOLERANCE, max_sweeps=constants.SPECTRAL.JACOBI_MAX_SWEEPS):
    """
    Cyclic Jacobi eigenvalue algorithm: sweeps over all off-diagonal pairs (p, q), annihilating a[p, q] with a
    plane rotation, until the off-diagonal Frobenius norm falls below tol times the norm of the matrix

    Args:
        :matrix: real symmetric matrix
        :tol: relative tolerance on the off-diagonal norm
        :max_sweeps: sweep budget

    Returns:
        (eigenvalues in ascending order, matrix whose columns are the matching eigenvectors)

    Raises:
        :EigenSolverError: if the off-diagonal norm did not converge within the sweep budget
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    _check_symmetric(a)
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a) or 1.0
    off = 0.0
    for _ in range(max_sweeps):
        off = np.sqrt(max(0.0, np.sum(a * a) - np.sum(np.diag(a) ** 2)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta != 0.0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        raise EigenSolverError("Jacobi rotations did not converge in {} sweeps".format(max_sweeps),
                               residual=off / scale)
    w = np.diag(a).copy()
    order = np.argsort(w)
    return w[order], v[:, order]


def symmetric_eigh(matrix, solver=constants.SPECTRAL.SOLVER_LAPACK):
    """
    Args:
        :matrix: real symmetric matrix
        :solver: lapack or jacobi

    Returns:
        (eigenvalues in ascending order, eigenvectors as columns)
    """
    if solver == constants.SPECTRAL.SOLVER_JACOBI:
        return jacobi_eigh(matrix)
    if solver != constants.SPECTRAL.SOLVER_LAPACK:
        raise ValueError("Unknown eigensolver {}, supported: {}".format(solver,
                                                                        constants.SPECTRAL.SUPPORTED_SOLVERS))
    a = np.asarray(matrix, dtype=np.float64)
    _check_symmetric(a)
    return np.linalg.eigh(a)


def _residuals(stack, values, vectors):
    """
    Returns:
        ||M x - lambda x||_2 / ||M||_F for every matrix of the stack
    """
    product = np.einsum("bij,bj->bi", stack, vectors)
    residual = np.linalg.norm(product - values[:, None] * vectors, axis=1)
    scale = np.maximum(np.linalg.norm(stack, axis=(1, 2)), np.finfo(np.float64).tiny)
    return residual / scale


def dominant_eigenpair(matrix, solver=constants.SPECTRAL.SOLVER_LAPACK):
    """
    Largest eigenvalue of a symmetric matrix with its eigenvector, verified by its residual

    Args:
        :matrix: real symmetric matrix
        :solver: lapack or jacobi

    Returns:
        (largest eigenvalue, unit eigenvector)

    Raises:
        :EigenSolverError: if the residual exceeds the tolerance
    """
    a = np.asarray(matrix, dtype=np.float64)
    w, v = symmetric_eigh(a, solver=solver)
    value, vector = float(w[-1]), v[:, -1]
    residual = float(_residuals(a[None, :, :], np.array([value]), vector[None, :])[0])
    if residual > constants.SPECTRAL.RESIDUAL_TOLERANCE:
        raise EigenSolverError("Dominant eigenpair residual {} exceeds {}".format(
            residual, constants.SPECTRAL.RESIDUAL_TOLERANCE), residual=residual)
    return value, vector


def batched_dominant_eigenvalues(stack):
    """
    Largest eigenvalue of every matrix of a stack of symmetric matrices, verified by the residuals

    Args:
        :stack: array of shape (batch, m, m)

    Returns:
        array of shape (batch,) with the largest eigenvalues

    Raises:
        :EigenSolverError: if any residual exceeds the tolerance
    """
    w, v = np.linalg.eigh(stack)
    values = w[:, -1]
    residuals = _residuals(stack, values, v[:, :, -1])
    worst = float(residuals.max()) if len(residuals) else 0.0
    if worst > constants.SPECTRAL.RESIDUAL_TOLERANCE:
        raise EigenSolverError("Dominant eigenpair residual {} exceeds {}".format(
            worst, constants.SPECTRAL.RESIDUAL_TOLERANCE), residual=worst)
    return values

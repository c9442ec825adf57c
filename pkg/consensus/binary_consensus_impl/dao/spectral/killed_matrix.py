import numpy as np


class KilledMatrix(object):
    """
    Represents the matrix Q_S derived from a contact-rate matrix Q and a subset S: rows of S keep only the
    diagonal entry -q_i, rows of the complement keep the off-diagonal rates q_{i,j} and the diagonal -q_i,
    where q_i = sum_l q_{i,l}
    """

    def __init__(self, entries, subset, degrees):
        """
        Args:
            :entries: the n x n numpy array of Q_S
            :subset: the SubsetMask S
            :degrees: the per-node total rates q_i
        """
        entries.setflags(write=False)
        self.entries = entries
        self.subset = subset
        self.degrees = degrees

    @property
    def n(self):
        return self.entries.shape[0]

    def principal_submatrix(self):
        """
        Returns:
            the symmetric principal submatrix M_S of Q_S on the complement of S
        """
        complement = self.subset.complement_indices
        return self.entries[np.ix_(complement, complement)]

    def killed_diagonal(self):
        """
        Returns:
            the diagonal entries -q_i of the rows in S, which are eigenvalues of Q_S
        """
        return -self.degrees[self.subset.indices]

    def __repr__(self):
        return "KilledMatrix(n={}, S={})".format(self.n, self.subset.members)

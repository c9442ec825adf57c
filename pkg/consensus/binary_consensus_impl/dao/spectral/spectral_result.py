from consensus import constants


class SpectralResult(object):
    """
    Represents the decay rate delta(Q, alpha): the smallest |lambda_{Q_S}| over the subsets S of size s0 - s1,
    the subset attaining it and the method used (exhaustive, closed_form, sampled). Values tagged `sampled`
    are upper estimates of delta, not certified minima.
    """

    def __init__(self, delta, argmin_subset, method, subset_size, evaluated=None):
        """
        Initialize the result

        Args:
            :delta: the decay rate
            :argmin_subset: the SubsetMask attaining delta, None for closed forms
            :method: the method tag
            :subset_size: |S| = s0 - s1
            :evaluated: number of subsets evaluated (optional)
        """
        self.delta = delta
        self.argmin_subset = argmin_subset
        self.method = method
        self.subset_size = subset_size
        self.evaluated = evaluated

    def to_json(self):
        """
        Returns:
            dict with the JSON representation of the result, subsets are listed with 1-based node indices
        """
        members = self.argmin_subset.members if self.argmin_subset is not None else []
        return {
            constants.JSON_CONFIG.JSON_DELTA: self.delta,
            constants.JSON_CONFIG.JSON_ARGMIN_SUBSET: members,
            constants.JSON_CONFIG.JSON_METHOD: self.method,
            constants.JSON_CONFIG.JSON_SUBSET_SIZE: self.subset_size,
        }

    def __repr__(self):
        return "SpectralResult(delta={}, method={}, subset_size={}, argmin={})".format(
            self.delta, self.method, self.subset_size, self.argmin_subset)

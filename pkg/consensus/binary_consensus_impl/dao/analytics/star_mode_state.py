from consensus.binary_consensus_impl.exceptions.exceptions import ModeRangeError


class StarModeState(object):
    """
    Represents the leaf-independent counts of a star network after i depletions of state 1 (mode i): x0 nodes in
    state 0, x1 nodes in state 1 and xe undecided nodes (state e0 or e1)
    """

    def __init__(self, n, s0, s1, i):
        """
        Args:
            :n: number of nodes
            :s0: initial number of state 0 nodes
            :s1: initial number of state 1 nodes
            :i: the mode index, 0 <= i < s1

        Raises:
            :ModeRangeError: if the mode index is outside of [0, s1)
        """
        if not (0 <= i < s1):
            raise ModeRangeError("Mode index must satisfy 0 <= i < s1={}, got: {}".format(s1, i))
        self.n = n
        self.i = i
        self.x0 = s0 - i
        self.x1 = s1 - i
        self.xe = n - s0 - s1 + 2 * i

    def __repr__(self):
        return "StarModeState(i={}, x0={}, x1={}, xe={})".format(self.i, self.x0, self.x1, self.xe)

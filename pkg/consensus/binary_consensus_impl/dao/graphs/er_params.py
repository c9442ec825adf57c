import math


class ErParams(object):
    """
    Represents the parameters of an Erdos-Renyi contact graph: every pair is an edge with probability
    p_n = c log(n) / n, edges carry the rate 1 / ((n - 1) p_n)
    """

    def __init__(self, n, c, seed=0):
        """
        Initialize the parameters and validate the edge probability

        Args:
            :n: the number of nodes
            :c: the edge-density constant
            :seed: the RNG seed of the generator

        Raises:
            :ValueError: if c is not positive or p_n falls outside of (0, 1)
        """
        if n < 2:
            raise ValueError("An Erdos-Renyi graph needs at least 2 nodes, got: {}".format(n))
        if c <= 0:
            raise ValueError("The edge-density constant c must be positive, got: {}".format(c))
        self.n = int(n)
        self.c = float(c)
        self.seed = int(seed)
        if not (0.0 < self.p_n < 1.0):
            raise ValueError("The edge probability p_n = c log(n)/n = {} must lie in (0, 1) for n={}, c={}"
                             .format(self.p_n, n, c))

    @property
    def p_n(self):
        return self.c * math.log(self.n) / self.n

    @property
    def edge_rate(self):
        return 1.0 / ((self.n - 1) * self.p_n)

    def __repr__(self):
        return "ErParams(n={}, c={}, seed={})".format(self.n, self.c, self.seed)

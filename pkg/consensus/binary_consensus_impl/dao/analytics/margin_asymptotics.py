class MarginAsymptotics(object):
    """
    Represents the scaling regime of the first phase on the complete graph for a voting margin mu: the term
    (1/mu) log(n mu), the regime label (theta_n, theta_log_n or power_law) and the dominant term of the regime
    """

    def __init__(self, n, mu, log_term, regime, dominant_term, exponent=None):
        self.n = n
        self.mu = mu
        self.log_term = log_term
        self.regime = regime
        self.dominant_term = dominant_term
        self.exponent = exponent

    def __repr__(self):
        return "MarginAsymptotics(n={}, mu={}, regime={}, dominant_term={})".format(
            self.n, self.mu, self.regime, self.dominant_term)

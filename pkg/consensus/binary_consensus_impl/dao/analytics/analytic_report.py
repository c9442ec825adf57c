from consensus import constants


class AnalyticReport(object):
    """
    Represents the analytic view of an experiment: the upper bounds (log n + 1)/delta on the expected duration of
    each phase, the exact expected duration of the first phase and its dominant asymptotic term where closed forms
    exist, and provenance notes naming the formulas used
    """

    def __init__(self, graph_family, n, s0, s1, delta, bound_t1, bound_t2, exact_t1=None, dominant_term=None,
                 notes=None):
        self.graph_family = graph_family
        self.n = n
        self.s0 = s0
        self.s1 = s1
        self.delta = delta
        self.bound_t1 = bound_t1
        self.bound_t2 = bound_t2
        self.exact_t1 = exact_t1
        self.dominant_term = dominant_term
        self.notes = list(notes or [])

    @property
    def bound_total(self):
        return self.bound_t1 + self.bound_t2

    def to_json(self):
        """
        Returns:
            dict with the JSON representation of the report
        """
        return {
            constants.JSON_CONFIG.JSON_GRAPH_FAMILY: self.graph_family,
            constants.JSON_CONFIG.JSON_N: self.n,
            constants.JSON_CONFIG.JSON_S0: self.s0,
            constants.JSON_CONFIG.JSON_S1: self.s1,
            constants.JSON_CONFIG.JSON_DELTA: self.delta,
            constants.JSON_CONFIG.JSON_BOUND_T1: self.bound_t1,
            constants.JSON_CONFIG.JSON_BOUND_T2: self.bound_t2,
            constants.JSON_CONFIG.JSON_BOUND_TOTAL: self.bound_total,
            constants.JSON_CONFIG.JSON_EXACT_T1: self.exact_t1,
            constants.JSON_CONFIG.JSON_DOMINANT_TERM: self.dominant_term,
            constants.JSON_CONFIG.JSON_NOTES: self.notes,
        }

    def __repr__(self):
        return "AnalyticReport(family={}, n={}, s0={}, s1={}, bound_t1={}, exact_t1={})".format(
            self.graph_family, self.n, self.s0, self.s1, self.bound_t1, self.exact_t1)

from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState


class TrialOutcome(object):
    """
    Represents the result of one simulated run of the protocol: the duration of the first phase (depletion of
    state 1), the duration of the second phase measured from t1 (depletion of state e1), the number of contacts
    and the final configuration
    """

    def __init__(self, t1, t2, total_events, final, truncated, seed):
        """
        Initialize the outcome

        Args:
            :t1: instant of the last ONE depletion, None if the run was truncated during the first phase
            :t2: elapsed time from t1 until the last E1 depletion, None for a draw or a truncated run
            :total_events: number of contacts sampled
            :final: the final Configuration
            :truncated: True if the time horizon was reached before termination
            :seed: the seed of the trial
        """
        self.t1 = t1
        self.t2 = t2
        self.total_events = total_events
        self.final = final
        self.truncated = truncated
        self.seed = seed

    @property
    def total_time(self):
        if self.t1 is None or self.t2 is None:
            return None
        return self.t1 + self.t2

    @property
    def correct(self):
        """
        Returns:
            True if the run ended in consensus on the initial majority: only ZERO and E0 states remain and at least
            one node holds ZERO
        """
        final = self.final
        return (self.t2 is not None and final.count(NodeState.ONE) == 0 and final.count(NodeState.E1) == 0
                and final.count(NodeState.ZERO) > 0)

    def __repr__(self):
        return "TrialOutcome(t1={}, t2={}, events={}, truncated={}, final={})".format(
            self.t1, self.t2, self.total_events, self.truncated, self.final.to_string())

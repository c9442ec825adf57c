from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState


class Configuration(object):
    """
    Represents the vector of node states at an instant, with cached occupancy counts of the four states
    """

    def __init__(self, states):
        """
        Initialize the configuration from a sequence of states

        Args:
            :states: sequence of NodeState (or their integer values), one per node
        """
        self.states = tuple(NodeState(s) for s in states)
        counts = [0, 0, 0, 0]
        for s in self.states:
            counts[s] += 1
        self.counts = tuple(counts)

    @classmethod
    def from_string(cls, text):
        """
        Decodes a configuration from its textual encoding, e.g. "1000" or "AB00"

        Args:
            :text: one character per node

        Returns:
            the decoded configuration
        """
        return cls([NodeState.from_char(ch) for ch in text.strip()])

    def to_string(self):
        return "".join(s.char for s in self.states)

    @property
    def n(self):
        return len(self.states)

    def count(self, state):
        return self.counts[state]

    def with_states(self, updates):
        """
        Returns a new configuration with some node states replaced

        Args:
            :updates: dict of 0-based node index -> new state

        Returns:
            the updated configuration
        """
        states = list(self.states)
        for index, state in updates.items():
            states[index] = state
        return Configuration(states)

    def __eq__(self, other):
        return isinstance(other, Configuration) and self.states == other.states

    def __hash__(self):
        return hash(self.states)

    def __repr__(self):
        return "Configuration({})".format(self.to_string())

from enum import IntEnum

from consensus import constants


class NodeState(IntEnum):
    """
    Represents the state held by a node, totally ordered as ZERO < E0 < E1 < ONE
    """
    ZERO = 0
    E0 = 1
    E1 = 2
    ONE = 3

    @property
    def char(self):
        """
        Returns:
            the one-character encoding of the state (0, A, B, 1)
        """
        return _STATE_CHARS[self]

    @classmethod
    def from_char(cls, char):
        """
        Args:
            :char: one of 0, A, B, 1

        Returns:
            the decoded state

        Raises:
            :ValueError: if the character does not encode a state
        """
        for state, state_char in _STATE_CHARS.items():
            if state_char == char:
                return state
        raise ValueError("Unknown state character: {!r}, expected one of {}".format(
            char, list(_STATE_CHARS.values())))


_STATE_CHARS = {
    NodeState.ZERO: constants.PROTOCOL.ZERO_CHAR,
    NodeState.E0: constants.PROTOCOL.E0_CHAR,
    NodeState.E1: constants.PROTOCOL.E1_CHAR,
    NodeState.ONE: constants.PROTOCOL.ONE_CHAR,
}

"""
The pairwise state update rules of binary interval consensus and configuration bookkeeping.

Rules (the order of a pair is irrelevant, the result is returned in the order of the arguments):

    1. (0, 1)   -> (e1, e0)
    2. (e0, 1)  -> (1, e1)
    3. (e1, 0)  -> (0, e0)
    4. (e0, 0)  -> (0, e0)    swap
    5. (e1, 1)  -> (1, e1)    swap
    6. (e0, e1) -> (e1, e0)   swap

Every other pair is left unchanged.
"""

import numpy as np

from consensus import constants
from consensus.binary_consensus_impl.dao.protocol.configuration import Configuration
from consensus.binary_consensus_impl.dao.protocol.init_spec import InitSpec
from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState

ZERO, E0, E1, ONE = NodeState.ZERO, NodeState.E0, NodeState.E1, NodeState.ONE

_RULES = {
    (ZERO, ONE): (E1, E0),
    (E0, ONE): (ONE, E1),
    (E1, ZERO): (ZERO, E0),
    (E0, ZERO): (ZERO, E0),
    (E1, ONE): (ONE, E1),
    (E0, E1): (E1, E0),
}


def _build_transition_table():
    """
    Builds the 4 x 4 x 2 lookup table of post-contact states for every ordered pair, used by the simulator's
    inner loop

    Returns:
        an integer numpy array table[a, b] = (a', b')
    """
    table = np.zeros((4, 4, 2), dtype=np.int8)
    for a in NodeState:
        for b in NodeState:
            table[a, b] = apply_contact(a, b)
    return table


def apply_contact(a, b):
    """
    Applies the update rules to an ordered pair of states

    Args:
        :a: the state of the first node
        :b: the state of the second node

    Returns:
        the pair of post-contact states, in the order of the arguments
    """
    a, b = NodeState(a), NodeState(b)
    if (a, b) in _RULES:
        return _RULES[(a, b)]
    if (b, a) in _RULES:
        new_b, new_a = _RULES[(b, a)]
        return new_a, new_b
    return a, b


TRANSITION_TABLE = _build_transition_table()


def contact(configuration, i, j):
    """
    Applies a contact between two nodes of a configuration

    Args:
        :configuration: the current configuration
        :i: 1-based index of the first node
        :j: 1-based index of the second node

    Returns:
        the configuration after the contact
    """
    a, b = apply_contact(configuration.states[i - 1], configuration.states[j - 1])
    return configuration.with_states({i - 1: a, j - 1: b})


def conserved_difference(configuration):
    """
    Returns:
        count(ZERO) - count(ONE), invariant under every contact
    """
    return configuration.count(ZERO) - configuration.count(ONE)


def replay_example_trace():
    """
    Replays the four-node line network example: from (1,0,0,0) the contacts (1,2), (3,4), (1,2), (2,3), (1,2)

    Returns:
        the list of configurations after each contact
    """
    configuration = Configuration.from_string(constants.PROTOCOL.EXAMPLE_INITIAL)
    trace = []
    for i, j in constants.PROTOCOL.EXAMPLE_CONTACTS:
        configuration = contact(configuration, i, j)
        trace.append(configuration)
    return trace


def initial_configuration(init):
    """
    Places the initial opinions on the nodes

    Args:
        :init: the InitSpec

    Returns:
        the initial Configuration
    """
    if init.placement == constants.PROTOCOL.PLACEMENT_EXPLICIT:
        return Configuration(init.states)
    states = [ZERO] * init.s0 + [ONE] * init.s1
    if init.placement == constants.PROTOCOL.PLACEMENT_RANDOM:
        order = np.random.Generator(np.random.Philox(init.seed)).permutation(init.n)
        states = [states[k] for k in order]
    return Configuration(states)


def hub_init_spec(s0, s1, hub_state):
    """
    Builds an explicit placement for a star network with the hub (node 1) in the given state and the remaining
    opinions placed on the leaves in prefix order

    Args:
        :s0: number of ZERO nodes
        :s1: number of ONE nodes
        :hub_state: NodeState.ZERO or NodeState.ONE

    Returns:
        the InitSpec
    """
    hub_state = NodeState(hub_state)
    if hub_state == ZERO:
        leaves = [ZERO] * (s0 - 1) + [ONE] * s1
    else:
        leaves = [ZERO] * s0 + [ONE] * (s1 - 1)
    return InitSpec(s0, s1, placement=constants.PROTOCOL.PLACEMENT_EXPLICIT, states=[hub_state] + leaves)

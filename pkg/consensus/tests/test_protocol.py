import itertools

import pytest

from consensus import constants
from consensus.binary_consensus_impl.dao.protocol.configuration import Configuration
from consensus.binary_consensus_impl.dao.protocol.init_spec import InitSpec
from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState
from consensus.binary_consensus_impl.exceptions.exceptions import InvalidInitSpecError
from consensus.binary_consensus_impl.protocol import rules

ZERO, E0, E1, ONE = NodeState.ZERO, NodeState.E0, NodeState.E1, NodeState.ONE


@pytest.mark.parametrize("pair,result", [
    ((ZERO, ONE), (E1, E0)),
    ((E0, ONE), (ONE, E1)),
    ((E1, ZERO), (ZERO, E0)),
    ((E0, ZERO), (ZERO, E0)),
    ((E1, ONE), (ONE, E1)),
    ((E0, E1), (E1, E0)),
])
def test_rules(pair, result):
    assert rules.apply_contact(*pair) == result
    # the order of the pair is irrelevant
    assert rules.apply_contact(pair[1], pair[0]) == (result[1], result[0])


@pytest.mark.parametrize("state", list(NodeState))
def test_equal_states_are_unchanged(state):
    assert rules.apply_contact(state, state) == (state, state)


def test_rules_conserve_the_difference_and_never_create_ones():
    for a, b in itertools.product(NodeState, repeat=2):
        new_a, new_b = rules.apply_contact(a, b)
        before, after = (a, b), (new_a, new_b)
        assert before.count(ZERO) - before.count(ONE) == after.count(ZERO) - after.count(ONE)
        assert after.count(ONE) <= before.count(ONE)


def test_rules_never_create_zeros():
    for a, b in itertools.product(NodeState, repeat=2):
        assert rules.apply_contact(a, b).count(ZERO) <= (a, b).count(ZERO), (a, b)


def test_e1_never_grows_without_a_one():
    for a, b in itertools.product(NodeState, repeat=2):
        if ONE in (a, b):
            continue
        assert rules.apply_contact(a, b).count(E1) <= (a, b).count(E1), (a, b)


@pytest.mark.parametrize("pair", [(E0, ZERO), (E1, ONE), (E0, E1)])
def test_swaps_are_involutions(pair):
    for a, b in (pair, pair[::-1]):
        swapped = rules.apply_contact(a, b)
        assert swapped == (b, a)
        assert rules.apply_contact(*swapped) == (a, b)


def test_transition_table_matches_rules():
    for a, b in itertools.product(NodeState, repeat=2):
        assert tuple(rules.TRANSITION_TABLE[a, b]) == tuple(int(s) for s in rules.apply_contact(a, b))


def test_example_trace():
    trace = [c.to_string() for c in rules.replay_example_trace()]
    assert trace[:4] == ["AB00", "AB00", "BA00", "B0A0"]
    # the last contact (1, 2) meets (e1, 0), which rule 3 maps to (0, e0)
    assert trace[4] == "0AA0"
    assert Configuration.from_string(trace[4]).counts == Configuration.from_string("A0A0").counts


def test_example_trace_conserves_the_difference():
    initial = Configuration.from_string(constants.PROTOCOL.EXAMPLE_INITIAL)
    assert rules.conserved_difference(initial) == 2
    for configuration in rules.replay_example_trace():
        assert rules.conserved_difference(configuration) == 2


def test_configuration_encoding():
    configuration = Configuration.from_string("0AB1")
    assert configuration.states == (ZERO, E0, E1, ONE)
    assert configuration.to_string() == "0AB1"
    assert configuration.counts == (1, 1, 1, 1)
    assert configuration.n == 4
    with pytest.raises(ValueError):
        Configuration.from_string("0X")


def test_contact_uses_one_based_nodes():
    configuration = rules.contact(Configuration.from_string("1000"), 1, 2)
    assert configuration.to_string() == "AB00"


def test_prefix_placement():
    configuration = rules.initial_configuration(InitSpec(3, 2))
    assert configuration.to_string() == "00011"


def test_random_placement_is_seeded():
    first = rules.initial_configuration(InitSpec(6, 4, placement=constants.PROTOCOL.PLACEMENT_RANDOM, seed=5))
    second = rules.initial_configuration(InitSpec(6, 4, placement=constants.PROTOCOL.PLACEMENT_RANDOM, seed=5))
    assert first == second
    assert first.count(ZERO) == 6
    assert first.count(ONE) == 4


def test_explicit_placement():
    init = InitSpec.from_states("1001")
    assert (init.s0, init.s1) == (2, 2)
    assert init.is_draw
    assert rules.initial_configuration(init).to_string() == "1001"


def test_hub_init_spec():
    assert rules.initial_configuration(rules.hub_init_spec(3, 2, ONE)).to_string() == "10001"
    assert rules.initial_configuration(rules.hub_init_spec(3, 2, ZERO)).to_string() == "00011"


def test_init_spec_validation():
    with pytest.raises(InvalidInitSpecError):
        InitSpec(-1, 2)
    with pytest.raises(InvalidInitSpecError):
        InitSpec(2, 1, placement=constants.PROTOCOL.PLACEMENT_RANDOM)
    with pytest.raises(InvalidInitSpecError):
        InitSpec(2, 1, placement="block")
    with pytest.raises(InvalidInitSpecError):
        InitSpec(2, 1, placement=constants.PROTOCOL.PLACEMENT_EXPLICIT, states=[ZERO, E0, ONE])
    with pytest.raises(InvalidInitSpecError):
        InitSpec(3, 2).validate_for(6)

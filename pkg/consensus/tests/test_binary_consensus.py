import json

import pytest

from consensus import binary_consensus, constants
from consensus.exceptions import ExperimentSpecError
from consensus.binary_consensus import NodeState, ExperimentSpec


def test_documented_examples():
    assert binary_consensus.apply_contact(NodeState.E1, NodeState.ZERO) == (NodeState.ZERO, NodeState.E0)
    trace = [binary_consensus.encode_configuration(c) for c in binary_consensus.replay_example_trace()]
    assert trace == ["AB00", "AB00", "BA00", "B0A0", "0AA0"]
    q = binary_consensus.load_edge_list("3\n1 2 1.0\n2 3 0.5\n")
    assert binary_consensus.node_degrees(q).tolist() == [1.0, 1.5, 0.5]
    assert sorted(binary_consensus.to_networkx(q).nodes()) == [0, 1, 2]


def test_configuration_helpers():
    configuration = binary_consensus.decode_configuration("01AB")
    assert binary_consensus.conserved_difference(configuration) == 0
    init = binary_consensus.init_spec(3, 1)
    assert binary_consensus.encode_configuration(binary_consensus.initial_configuration(init)) == "0001"


def test_delta_of_a_path_through_the_api():
    q = binary_consensus.path_graph(8)
    exact = binary_consensus.delta_exhaustive(q, 6, 2).delta
    assert exact == pytest.approx(binary_consensus.closed_form_path(8, 0.75), abs=1e-9)
    assert binary_consensus.closed_form_delta(constants.GRAPH.PATH, 8, 6, 2).delta == pytest.approx(exact, abs=1e-9)
    s = binary_consensus.subset([1, 2, 3, 4], 8)
    assert binary_consensus.dominant_eigenvalue(binary_consensus.build_qs(q, s)) == pytest.approx(-exact, abs=1e-9)


def test_analytic_report_through_the_api():
    report = binary_consensus.analytic_report("complete", 100, 75, 25)
    assert report.exact_t1 == pytest.approx(binary_consensus.expected_t1_complete(100, 75, 25))
    assert report.bound_t1 == pytest.approx(binary_consensus.theorem_bound(50.0 / 99.0, 100)[0])


def test_run_returns_the_rendered_output(tmpdir):
    out = tmpdir.join("bounds.json")
    spec = ExperimentSpec(constants.CLI.SUBCOMMAND_BOUNDS, constants.GRAPH.COMPLETE, n=10, s0=7, s1=3,
                          out=str(out), fmt=constants.CLI.FORMAT_JSON)
    text = binary_consensus.run(spec)
    assert out.read() == text
    rows = json.loads(text)[constants.JSON_CONFIG.JSON_ROWS]
    assert rows[0]["delta"] == pytest.approx(4.0 / 9.0)
    with pytest.raises(ExperimentSpecError):
        binary_consensus.run(ExperimentSpec(constants.CLI.SUBCOMMAND_SIM, constants.GRAPH.COMPLETE, n=10))

import datetime
import io
import json
import math
import os

import mock
import pandas as pd
import pytest

from consensus import constants, cli, util
from consensus.binary_consensus_impl.analytics import complete_graph
from consensus.binary_consensus_impl.spectral import spectral


def _without_timestamp(text):
    return [line for line in text.splitlines() if constants.JSON_CONFIG.JSON_GENERATED_AT not in line]


def test_sim_writes_a_csv_table(tmpdir):
    out = tmpdir.join("sim.csv")
    code = cli.main(["sim", "--graph", "complete", "--n", "20", "--alpha", "0.75", "--trials", "20",
                     "--out", str(out)])
    assert code == constants.CLI.EXIT_OK
    text = out.read()
    assert text.startswith(constants.CSV_CONFIG.METADATA_PREFIX)
    table = pd.read_csv(str(out), comment="#")
    assert list(table.columns) == constants.CSV_CONFIG.SIM_COLUMNS
    assert (table["s0"][0], table["s1"][0]) == (15, 5)
    assert table["exact_t1"][0] == pytest.approx(complete_graph.expected_t1_complete(20, 15, 5), rel=1e-11)


def test_delta_as_json(capsys):
    code = cli.main(["delta", "--graph", "path", "--n", "8", "--s0", "6", "--s1", "2", "--format", "json"])
    assert code == constants.CLI.EXIT_OK
    document = json.loads(capsys.readouterr().out)
    rows = document[constants.JSON_CONFIG.JSON_ROWS]
    assert rows[constants.JSON_CONFIG.JSON_METHOD] == constants.SPECTRAL.METHOD_EXHAUSTIVE
    assert rows[constants.JSON_CONFIG.JSON_DELTA] == pytest.approx(2.0 * (1.0 - math.cos(math.pi / 9.0)))
    assert document[constants.JSON_CONFIG.JSON_METADATA]["n"] == 8


def test_analytic_star_with_hub_state(capsys):
    code = cli.main(["analytic", "--graph", "star", "--n", "8", "--s0", "6", "--s1", "2", "--hub-state", "one",
                     "--format", "json"])
    assert code == constants.CLI.EXIT_OK
    rows = json.loads(capsys.readouterr().out)[constants.JSON_CONFIG.JSON_ROWS]
    assert rows[constants.JSON_CONFIG.JSON_EXACT_T1] == pytest.approx(7.0 / 6.0 + 8.26)
    assert constants.ANALYTICS.NOTE_STAR_MODE_SUM in rows[constants.JSON_CONFIG.JSON_NOTES]


def test_sweep_rounds_counts_up(tmpdir):
    out = tmpdir.join("sweep.csv")
    code = cli.main(["sweep", "--graph", "complete", "--n", "20", "--alpha-grid", "0.6:0.8:0.1", "--trials", "10",
                     "--out", str(out)])
    assert code == constants.CLI.EXIT_OK
    table = pd.read_csv(str(out), comment="#")
    assert list(table.columns) == constants.CSV_CONFIG.SWEEP_COLUMNS
    assert table["s0"].tolist() == [12, 14, 16]
    assert table["alpha"].tolist() == pytest.approx([0.6, 0.7, 0.8])


def test_survival_on_a_grid(capsys):
    code = cli.main(["survival", "--graph", "cycle", "--n", "9", "--s0", "6", "--s1", "3", "--trials", "10",
                     "--grid", "0:10:5", "--format", "json"])
    assert code == constants.CLI.EXIT_OK
    rows = json.loads(capsys.readouterr().out)[constants.JSON_CONFIG.JSON_ROWS]
    assert [row["time"] for row in rows] == pytest.approx([0.0, 2.5, 5.0, 7.5, 10.0])
    assert rows[0]["phase1_survival"] == 1.0


def test_bounds_are_deterministic(capsys):
    args = ["bounds", "--graph", "cycle", "--n", "12", "--alpha", "0.75"]
    cli.main(args)
    first = capsys.readouterr().out
    cli.main(args)
    second = capsys.readouterr().out
    assert _without_timestamp(first) == _without_timestamp(second)
    table = pd.read_csv(io.StringIO(first), comment="#")
    assert list(table.columns) == constants.CSV_CONFIG.BOUNDS_COLUMNS


@pytest.mark.parametrize("argv", [
    ["sim", "--graph", "er", "--n", "50"],
    ["sim", "--graph", "complete", "--n", "10", "--s0", "6"],
    ["sim", "--graph", "complete", "--n", "10", "--s0", "3", "--s1", "7"],
    ["sim", "--graph", "complete", "--n", "10", "--alpha", "0.7", "--trials", "1"],
    ["bounds", "--graph", "path", "--n", "10", "--alpha", "0.7", "--hub-state", "one"],
    ["sweep", "--graph", "complete", "--n", "10", "--alpha-grid", "0.4:0.8:0.1"],
])
def test_usage_errors_exit_with_two(argv, capsys):
    assert cli.main(argv) == constants.CLI.EXIT_USAGE
    assert capsys.readouterr().err.startswith(constants.CLI.PROG + ": error:")


def test_domain_errors_exit_with_one(tmpdir, capsys):
    assert cli.main(["bounds", "--graph", "complete", "--n", "1", "--s0", "1", "--s1", "0"]) == \
        constants.CLI.EXIT_FAILURE
    assert "InvalidGraphSizeError" in capsys.readouterr().err
    missing = str(tmpdir.join("missing.txt"))
    assert cli.main(["bounds", "--graph", "file", "--edge-list", missing, "--s0", "2", "--s1", "1"]) == \
        constants.CLI.EXIT_FAILURE


def test_enumeration_guard_exits_with_one(capsys):
    with mock.patch.dict(os.environ, {constants.ENV_VARIABLES.MAX_N_ENV_VAR: "10"}):
        code = cli.main(["delta", "--graph", "cycle", "--n", "12", "--alpha", "0.75"])
    assert code == constants.CLI.EXIT_FAILURE
    assert "EnumerationGuardError" in capsys.readouterr().err


def test_argparse_rejects_unknown_families():
    with pytest.raises(SystemExit) as error:
        cli.main(["sim", "--graph", "grid", "--n", "10"])
    assert error.value.code == constants.CLI.EXIT_USAGE


def test_out_of_memory_exits_with_one(capsys):
    with mock.patch.object(spectral, "delta_sampled", side_effect=MemoryError("Unable to allocate")):
        code = cli.main(["bounds", "--graph", "er", "--n", "60", "--c", "2", "--alpha", "0.6"])
    assert code == constants.CLI.EXIT_FAILURE
    assert "MemoryError" in capsys.readouterr().err


def test_timestamp_is_utc():
    stamp = util.timestamp()
    assert stamp.endswith("Z")
    parsed = datetime.datetime.strptime(stamp, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=datetime.timezone.utc)
    assert abs((datetime.datetime.now(datetime.timezone.utc) - parsed).total_seconds()) < 60

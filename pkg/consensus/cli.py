"""
Command line driver of the consensus toolkit.

    $ consensus sim --graph complete --n 100 --alpha 0.75 --trials 2000
    $ consensus delta --graph path --n 8 --s0 6 --s1 2 --method exhaustive --format json
    $ consensus sweep --graph star --n 1000 --alpha-grid 0.55:0.95:0.05 --trials 500 --out star_sweep.csv

Exit codes: 0 on success, 2 on usage errors, 1 when graph generation or a numerical computation fails.
"""

import argparse
import sys

from consensus import constants, util
from consensus.exceptions import ExperimentSpecError, UnknownGraphFamilyError
from consensus.binary_consensus_impl import core
from consensus.binary_consensus_impl.dao.experiment.experiment_spec import ExperimentSpec
from consensus.binary_consensus_impl.exceptions import exceptions

_DOMAIN_ERRORS = (
    exceptions.InvalidGraphSizeError,
    exceptions.GraphGenerationError,
    exceptions.EdgeListParseError,
    exceptions.EdgeListConsistencyError,
    exceptions.DisconnectedGraphError,
    exceptions.InvalidInitSpecError,
    exceptions.InvalidSubsetError,
    exceptions.EigenSolverError,
    exceptions.EnumerationGuardError,
    exceptions.AnalyticDomainError,
    exceptions.ModeRangeError,
    exceptions.UnsupportedHubStateError,
    exceptions.InvalidCountsError,
    ValueError,
    OSError,
    MemoryError,
)

_COMMAND_HELP = {
    constants.CLI.SUBCOMMAND_SIM: "Monte Carlo estimate of E(T1) and E(T2) against the bound and exact values",
    constants.CLI.SUBCOMMAND_DELTA: "the decay rate delta(Q, alpha)",
    constants.CLI.SUBCOMMAND_BOUNDS: "the bound (log n + 1)/delta on both phases",
    constants.CLI.SUBCOMMAND_ANALYTIC: "bounds, exact values and asymptotic terms of a family",
    constants.CLI.SUBCOMMAND_SURVIVAL: "fraction of unfinished trials over a time grid, with the tail bound",
    constants.CLI.SUBCOMMAND_SWEEP: "simulation rows over a grid of majority fractions",
}


def _add_common_arguments(parser, command):
    parser.add_argument("--graph", required=True, choices=constants.GRAPH.SUPPORTED_FAMILIES,
                        help="graph family")
    parser.add_argument("--n", type=int, help="number of nodes")
    parser.add_argument("--c", type=float, help="edge-density constant of the er family, p_n = c log(n)/n")
    parser.add_argument("--edge-list", dest="edge_list", help="edge-list file of the file family")
    if command != constants.CLI.SUBCOMMAND_SWEEP:
        parser.add_argument("--s0", type=int, help="initial number of state 0 nodes")
        parser.add_argument("--s1", type=int, help="initial number of state 1 nodes")
        parser.add_argument("--alpha", type=float, help="majority fraction, s0 = ceil(alpha n)")
    else:
        parser.add_argument("--alpha-grid", dest="alpha_grid", required=True,
                            help="majority fractions a:b:step, both ends included")
    parser.add_argument("--seed", type=int, default=constants.CLI.DEFAULT_SEED, help="base seed")
    parser.add_argument("--out", help="output path, stdout when absent")
    parser.add_argument("--format", dest="fmt", default=constants.CLI.FORMAT_CSV,
                        choices=[constants.CLI.FORMAT_CSV, constants.CLI.FORMAT_JSON], help="output format")
    parser.add_argument("--hub-state", dest="hub_state",
                        choices=[constants.ANALYTICS.HUB_ZERO, constants.ANALYTICS.HUB_ONE],
                        help="initial state of the star hub (node 1)")
    parser.add_argument("--placement", default=constants.PROTOCOL.PLACEMENT_PREFIX,
                        choices=[constants.PROTOCOL.PLACEMENT_PREFIX, constants.PROTOCOL.PLACEMENT_RANDOM],
                        help="initial placement of the opinions")


def _add_trial_arguments(parser):
    parser.add_argument("--trials", type=int, default=constants.CLI.DEFAULT_TRIALS, help="number of trials")
    parser.add_argument("--t-max", dest="t_max", type=float, help="truncation time of every trial")
    parser.add_argument("--workers", type=int, default=1, help="number of worker processes")


def build_parser():
    """
    Returns:
        the argparse parser of the `consensus` command
    """
    parser = argparse.ArgumentParser(prog=constants.CLI.PROG,
                                     description="Simulation and analysis of binary interval consensus")
    parser.add_argument("--log-level", dest="log_level", help="log level, defaults to $CONSENSUS_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for command, text in _COMMAND_HELP.items():
        sub = subparsers.add_parser(command, help=text, description=text)
        _add_common_arguments(sub, command)
        if command in (constants.CLI.SUBCOMMAND_SIM, constants.CLI.SUBCOMMAND_SURVIVAL,
                       constants.CLI.SUBCOMMAND_SWEEP):
            _add_trial_arguments(sub)
        if command == constants.CLI.SUBCOMMAND_DELTA:
            sub.add_argument("--method", default=constants.SPECTRAL.METHOD_EXHAUSTIVE,
                             choices=constants.SPECTRAL.SUPPORTED_METHODS, help="how delta is computed")
            sub.add_argument("--samples", type=int, default=constants.SPECTRAL.DEFAULT_SAMPLES,
                             help="number of random subsets of the sampled method")
        if command == constants.CLI.SUBCOMMAND_SURVIVAL:
            sub.add_argument("--grid", help="time points a:b:count, defaults to 20 points up to the total bound")
    return parser


def spec_from_args(args):
    """
    Converts parsed arguments into an ExperimentSpec

    Returns:
        the ExperimentSpec
    """
    fields = vars(args)
    return ExperimentSpec(
        args.command, args.graph, n=args.n, c=args.c, edge_list=args.edge_list,
        s0=fields.get("s0"), s1=fields.get("s1"), alpha=fields.get("alpha"), alpha_grid=fields.get("alpha_grid"),
        trials=fields.get("trials", constants.CLI.DEFAULT_TRIALS), seed=args.seed, t_max=fields.get("t_max"),
        placement=args.placement, hub_state=args.hub_state,
        method=fields.get("method", constants.SPECTRAL.METHOD_EXHAUSTIVE),
        samples=fields.get("samples", constants.SPECTRAL.DEFAULT_SAMPLES), grid=fields.get("grid"),
        workers=fields.get("workers", 1), out=args.out, fmt=args.fmt)


def _fail(message, code):
    sys.stderr.write("{}: error: {}\n".format(constants.CLI.PROG, message))
    return code


def main(argv=None):
    """
    Entry point of the `consensus` console script

    Args:
        :argv: the arguments, defaults to sys.argv[1:]

    Returns:
        the exit code
    """
    args = build_parser().parse_args(argv)
    util.setup_logging(level=args.log_level.upper() if args.log_level else None)
    try:
        core._do_run(spec_from_args(args))
    except (ExperimentSpecError, UnknownGraphFamilyError) as e:
        return _fail(str(e), constants.CLI.EXIT_USAGE)
    except _DOMAIN_ERRORS as e:
        return _fail("{}: {}".format(type(e).__name__, e), constants.CLI.EXIT_FAILURE)
    return constants.CLI.EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

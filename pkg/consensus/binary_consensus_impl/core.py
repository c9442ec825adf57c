"""
Binary Interval Consensus Core Implementation

Module hierarchy of the implementation:

- binary_consensus
       |
       --- core
             |
             ----dao
             ----exceptions
             ----graph_model
             ----protocol
             ----simulator
             ----spectral
             ----analytics
             ----util
"""

import numpy as np
import pandas as pd

from consensus import constants, util
from consensus.version import __version__
from consensus.exceptions import UnknownGraphFamilyError
from consensus.binary_consensus_impl.analytics import bounds, complete_graph, star_graph
from consensus.binary_consensus_impl.dao.experiment.experiment_spec import ExperimentSpec
from consensus.binary_consensus_impl.dao.graphs.er_params import ErParams
from consensus.binary_consensus_impl.dao.protocol.init_spec import InitSpec
from consensus.binary_consensus_impl.dao.protocol.node_state import NodeState
from consensus.binary_consensus_impl.exceptions.exceptions import EnumerationGuardError
from consensus.binary_consensus_impl.graph_model import generators, edge_list
from consensus.binary_consensus_impl.protocol import rules
from consensus.binary_consensus_impl.simulator import monte_carlo
from consensus.binary_consensus_impl.spectral import spectral, closed_forms
from consensus.binary_consensus_impl.util import bc_utils

_GENERATORS = {
    constants.GRAPH.COMPLETE: generators.complete_graph,
    constants.GRAPH.PATH: generators.path_graph,
    constants.GRAPH.CYCLE: generators.cycle_graph,
    constants.GRAPH.STAR: generators.star_graph,
}

_CLOSED_FORM_FAMILIES = [constants.GRAPH.COMPLETE, constants.GRAPH.PATH, constants.GRAPH.CYCLE,
                         constants.GRAPH.STAR]


def _do_build_graph(graph_family, n=None, c=None, edge_list_path=None, seed=0):
    """
    Builds the contact matrix of an experiment

    Args:
        :graph_family: complete, path, cycle, star, er or file
        :n: number of nodes
        :c: edge-density constant of the er family
        :edge_list_path: path of the edge-list of the file family
        :seed: the seed of the er generator

    Returns:
        the ContactMatrix

    Raises:
        :UnknownGraphFamilyError: if the family is not supported
    """
    if graph_family in _GENERATORS:
        return _GENERATORS[graph_family](n)
    if graph_family == constants.GRAPH.ER:
        return generators.erdos_renyi_graph(ErParams(n, c, seed=seed))
    if graph_family == constants.GRAPH.FILE:
        return edge_list.load_edge_list_file(edge_list_path)
    raise UnknownGraphFamilyError("Unknown graph family {}, supported: {}".format(
        graph_family, constants.GRAPH.SUPPORTED_FAMILIES))


def _do_delta(matrix, s0, s1, method=constants.SPECTRAL.METHOD_EXHAUSTIVE,
              samples=constants.SPECTRAL.DEFAULT_SAMPLES, seed=0):
    """
    Computes delta with the requested method

    Returns:
        the SpectralResult
    """
    if method == constants.SPECTRAL.METHOD_EXHAUSTIVE:
        return spectral.delta_exhaustive(matrix, s0, s1)
    if method == constants.SPECTRAL.METHOD_CLOSED_FORM:
        return closed_forms.closed_form_delta(matrix.family, matrix.n, s0, s1)
    if method == constants.SPECTRAL.METHOD_SAMPLED:
        return spectral.delta_sampled(matrix, s0, s1, samples=samples, seed=seed)
    raise ValueError("Unknown method {}, supported: {}".format(method, constants.SPECTRAL.SUPPORTED_METHODS))


def _do_best_delta(matrix, s0, s1, c=None, seed=0):
    """
    The most exact delta available for a graph: the family closed form, exhaustive enumeration within the guard,
    the high probability lower bound for er, otherwise a sampled upper estimate

    Returns:
        (delta, provenance note), (None, None) without a strict majority
    """
    if s0 == s1:
        return None, None
    if matrix.family in _CLOSED_FORM_FAMILIES:
        return closed_forms.closed_form_delta(matrix.family, matrix.n, s0, s1).delta, \
            constants.ANALYTICS.NOTE_CLOSED_FORM_DELTA
    try:
        return spectral.delta_exhaustive(matrix, s0, s1).delta, constants.SPECTRAL.METHOD_EXHAUSTIVE
    except EnumerationGuardError:
        pass
    if matrix.family == constants.GRAPH.ER and c is not None and c * (2.0 * s0 / matrix.n - 1.0) > 2.0:
        return closed_forms.delta_er_bound(matrix.n, c, bc_utils._alpha(matrix.n, s0)), \
            constants.ANALYTICS.NOTE_ER_PHI_INVERSE_BOUND
    return spectral.delta_sampled(matrix, s0, s1, seed=seed).delta, constants.SPECTRAL.METHOD_SAMPLED


def _do_init_spec(matrix, s0, s1, placement=constants.PROTOCOL.PLACEMENT_PREFIX, seed=0, hub_state=None):
    """
    Builds the initial opinions of an experiment; on a star an explicit hub state places it on node 1

    Returns:
        the InitSpec
    """
    if hub_state is not None and matrix.family == constants.GRAPH.STAR:
        hub = NodeState.ZERO if hub_state == constants.ANALYTICS.HUB_ZERO else NodeState.ONE
        return rules.hub_init_spec(s0, s1, hub)
    init = InitSpec(s0, s1, placement=placement, seed=seed if placement == constants.PROTOCOL.PLACEMENT_RANDOM
                    else None)
    init.validate_for(matrix.n)
    return init


def _do_exact_t1(matrix, init):
    """
    Returns:
        the exact E(T1) for complete graphs and stars, None otherwise
    """
    if init.s1 == 0:
        return 0.0
    if matrix.family == constants.GRAPH.COMPLETE:
        return complete_graph.expected_t1_complete(init.n, init.s0, init.s1)
    if matrix.family == constants.GRAPH.STAR:
        hub = rules.initial_configuration(init).states[constants.GRAPH.HUB_INDEX]
        return star_graph.expected_t1_star(init.n, init.s0, init.s1, hub)
    return None


def _do_dominant_term(matrix, s0, s1):
    if s0 == s1 or s1 == 0:
        return None
    if matrix.family == constants.GRAPH.COMPLETE:
        return complete_graph.margin_asymptotics(matrix.n, (s0 - s1) / float(matrix.n)).dominant_term
    if matrix.family == constants.GRAPH.STAR:
        return star_graph.star_dominant_term(matrix.n, s0)
    return None


def _do_simulation_row(spec, matrix, s0, s1):
    """
    Runs the Monte Carlo trials of one parameter point

    Returns:
        dict with the columns of the simulation table
    """
    delta, _ = _do_best_delta(matrix, s0, s1, c=spec.c, seed=spec.seed)
    init = _do_init_spec(matrix, s0, s1, placement=spec.placement, seed=spec.seed, hub_state=spec.hub_state)
    summary = monte_carlo.run_monte_carlo(matrix, init, spec.trials, base_seed=spec.seed, t_max=spec.t_max,
                                          delta=delta, workers=spec.workers)
    bound_t1 = bounds.theorem_bound(delta, matrix.n)[0] if delta is not None else None
    return {
        "n": matrix.n, "s0": s0, "s1": s1,
        "mean_t1": summary.mean_t1, "ci_t1": summary.ci95_t1,
        "mean_t2": summary.mean_t2, "ci_t2": summary.ci95_t2,
        "bound_t1": bound_t1, "exact_t1": _do_exact_t1(matrix, init),
    }


def _frame(rows, columns):
    return pd.DataFrame(rows, columns=columns)


def _do_sim(spec, matrix, metadata):
    s0, s1 = spec.counts_for(matrix.n)
    metadata.update(spec.rounding_metadata(matrix.n))
    return _frame([_do_simulation_row(spec, matrix, s0, s1)], constants.CSV_CONFIG.SIM_COLUMNS)


def _do_sweep(spec, matrix, metadata):
    rows = []
    for alpha in ExperimentSpec.parse_alpha_grid(spec.alpha_grid):
        s0, s1 = spec.counts_for(matrix.n, alpha)
        bc_utils._log("Sweep point alpha={}: s0={}, s1={}".format(alpha, s0, s1))
        row = _do_simulation_row(spec, matrix, s0, s1)
        row.update({"alpha": alpha, "margin": (s0 - s1) / float(matrix.n),
                    "dominant_term": _do_dominant_term(matrix, s0, s1)})
        rows.append(row)
    metadata["rounding"] = "ceil"
    return _frame(rows, constants.CSV_CONFIG.SWEEP_COLUMNS)


def _do_delta_table(spec, matrix, metadata):
    s0, s1 = spec.counts_for(matrix.n)
    metadata.update(spec.rounding_metadata(matrix.n))
    return _do_delta(matrix, s0, s1, method=spec.method, samples=spec.samples, seed=spec.seed).to_json()


def _do_bounds(spec, matrix, metadata):
    s0, s1 = spec.counts_for(matrix.n)
    metadata.update(spec.rounding_metadata(matrix.n))
    delta, note = _do_best_delta(matrix, s0, s1, c=spec.c, seed=spec.seed)
    if delta is None:
        bound_t1 = bound_t2 = bound_total = None
    else:
        bound_t1, bound_t2, bound_total = bounds.theorem_bound(delta, matrix.n)
    metadata["delta_source"] = note
    return _frame([{"n": matrix.n, "s0": s0, "s1": s1, "delta": delta, "bound_t1": bound_t1,
                    "bound_t2": bound_t2, "bound_total": bound_total}], constants.CSV_CONFIG.BOUNDS_COLUMNS)


def _do_analytic(spec, matrix, metadata):
    s0, s1 = spec.counts_for(matrix.n)
    metadata.update(spec.rounding_metadata(matrix.n))
    delta, note = _do_best_delta(matrix, s0, s1, c=spec.c, seed=spec.seed)
    hub = None
    if matrix.family == constants.GRAPH.STAR:
        init = _do_init_spec(matrix, s0, s1, placement=spec.placement, seed=spec.seed, hub_state=spec.hub_state)
        hub = rules.initial_configuration(init).states[constants.GRAPH.HUB_INDEX]
    report = bounds.analytic_report(matrix.family, matrix.n, s0, s1, hub_initial=hub, delta=delta, c=spec.c)
    metadata["delta_source"] = note
    return report.to_json()


def _do_survival(spec, matrix, metadata):
    s0, s1 = spec.counts_for(matrix.n)
    metadata.update(spec.rounding_metadata(matrix.n))
    delta, note = _do_best_delta(matrix, s0, s1, c=spec.c, seed=spec.seed)
    if spec.grid is not None:
        grid = ExperimentSpec.parse_time_grid(spec.grid)
    else:
        horizon = bounds.theorem_bound(delta, matrix.n)[2] if delta is not None else 1.0
        grid = np.linspace(0.0, horizon, constants.CLI.DEFAULT_GRID_POINTS)
    init = _do_init_spec(matrix, s0, s1, placement=spec.placement, seed=spec.seed, hub_state=spec.hub_state)
    curve = monte_carlo.survival_curve(matrix, init, spec.trials, grid, base_seed=spec.seed, t_max=spec.t_max,
                                       delta=delta, workers=spec.workers)
    metadata["delta_source"] = note
    return curve.to_dataframe()


_COMMANDS = {
    constants.CLI.SUBCOMMAND_SIM: _do_sim,
    constants.CLI.SUBCOMMAND_SWEEP: _do_sweep,
    constants.CLI.SUBCOMMAND_DELTA: _do_delta_table,
    constants.CLI.SUBCOMMAND_BOUNDS: _do_bounds,
    constants.CLI.SUBCOMMAND_ANALYTIC: _do_analytic,
    constants.CLI.SUBCOMMAND_SURVIVAL: _do_survival,
}


def _do_render(result, metadata, fmt):
    """
    Renders a command result as CSV (tables only) or JSON

    Returns:
        the rendered text
    """
    if fmt == constants.CLI.FORMAT_JSON:
        if isinstance(result, pd.DataFrame):
            payload = [_json_safe(row) for row in result.to_dict(orient="records")]
        else:
            payload = _json_safe(result)
        return util.render_json(payload, metadata)
    if isinstance(result, pd.DataFrame):
        return util.render_csv(result, metadata)
    return util.render_csv(pd.DataFrame([_flatten(result)]), metadata)


def _json_safe(row):
    # NaN is not valid JSON
    return {key: (None if isinstance(value, float) and np.isnan(value) else value) for key, value in row.items()}


def _flatten(payload):
    return {key: (constants.DELIMITERS.COMMA_DELIMITER.join(str(v) for v in value)
                  if isinstance(value, list) else value) for key, value in payload.items()}


def _do_run(spec):
    """
    Runs an experiment and writes its output

    Args:
        :spec: the ExperimentSpec

    Returns:
        the rendered output
    """
    spec.validate()
    matrix = _do_build_graph(spec.graph, n=spec.n, c=spec.c, edge_list_path=spec.edge_list, seed=spec.seed)
    metadata = spec.metadata()
    metadata["n"] = matrix.n
    metadata["version"] = __version__
    result = _COMMANDS[spec.command](spec, matrix, metadata)
    metadata[constants.JSON_CONFIG.JSON_GENERATED_AT] = util.timestamp()
    text = _do_render(result, metadata, spec.fmt)
    util.write_output(text, spec.out)
    if spec.out is not None:
        bc_utils._log("Wrote {} output of '{}' to {}".format(spec.fmt, spec.command, spec.out))
    return text

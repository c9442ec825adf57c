"""
String and numeric constants used in the consensus library: environment variables, graph limits,
simulation defaults, spectral tolerances, JSON keys and CSV columns.
"""


class ENV_VARIABLES:
    """
    Environment variable names (accessible in os.environ)
    """
    MAX_N_ENV_VAR = "CONSENSUS_MAX_N"
    LOG_LEVEL_ENV_VAR = "CONSENSUS_LOG_LEVEL"


class LOGGING:
    """
    Logging constants
    """
    LOGGER_NAME = "consensus"
    DEFAULT_LEVEL = "WARNING"
    FORMAT = "%(asctime)s [%(levelname)8s] %(message)s"
    DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class GRAPH:
    """
    Graph families and limits of the contact-rate matrix generators
    """
    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    ER = "er"
    FILE = "file"
    SUPPORTED_FAMILIES = [COMPLETE, PATH, CYCLE, STAR, ER, FILE]
    # families whose automorphism group acts transitively on the nodes
    VERTEX_TRANSITIVE_FAMILIES = [COMPLETE, CYCLE]
    MAX_DENSE_N = 4096
    ER_MAX_ATTEMPTS = 100
    HUB_INDEX = 0
    EDGE_LIST_COMMENT = "#"


class PROTOCOL:
    """
    Textual encoding of the node states and the initial placements
    """
    ZERO_CHAR = "0"
    E0_CHAR = "A"
    E1_CHAR = "B"
    ONE_CHAR = "1"
    PLACEMENT_PREFIX = "prefix"
    PLACEMENT_RANDOM = "random"
    PLACEMENT_EXPLICIT = "explicit"
    SUPPORTED_PLACEMENTS = [PLACEMENT_PREFIX, PLACEMENT_RANDOM, PLACEMENT_EXPLICIT]
    # node indices (1-based) of the contacts replayed by the line-network example, from state (1,0,0,0)
    EXAMPLE_INITIAL = "1000"
    EXAMPLE_CONTACTS = [(1, 2), (3, 4), (1, 2), (2, 3), (1, 2)]


class SIMULATION:
    """
    Simulator and Monte Carlo harness defaults
    """
    DEFAULT_T_MAX = 1e6
    T_MAX_BOUND_MULTIPLE = 50.0
    EVENT_BATCH_SIZE = 4096
    CI95_Z = 1.96
    MIN_TRIALS = 2
    TRIAL_LOG_COLUMNS = ["event_index", "time", "i", "j", "state_i_before", "state_j_before",
                         "state_i_after", "state_j_after"]


class SPECTRAL:
    """
    Spectral computation constants
    """
    METHOD_EXHAUSTIVE = "exhaustive"
    METHOD_CLOSED_FORM = "closed_form"
    METHOD_SAMPLED = "sampled"
    SUPPORTED_METHODS = [METHOD_EXHAUSTIVE, METHOD_CLOSED_FORM, METHOD_SAMPLED]
    MAX_ENUMERATION_N = 24
    MAX_MASK_BITS = 64
    JACOBI_TOLERANCE = 1e-12
    JACOBI_MAX_SWEEPS = 100
    RESIDUAL_TOLERANCE = 1e-10
    DEFAULT_SAMPLES = 2000
    ENUMERATION_CHUNK = 4096
    EIGH_BATCH_BYTES = 64 * 2 ** 20
    SOLVER_LAPACK = "lapack"
    SOLVER_JACOBI = "jacobi"
    SUPPORTED_SOLVERS = [SOLVER_LAPACK, SOLVER_JACOBI]
    TRIDIAGONAL_BOTH_ENDS = "both_ends"
    TRIDIAGONAL_ONE_END = "one_end"


class ANALYTICS:
    """
    Analytic formula constants and provenance notes
    """
    PHI_BISECTION_TOLERANCE = 1e-12
    HARMONIC_DIRECT_SUM_LIMIT = 10 ** 6
    REGIME_LINEAR = "theta_n"
    REGIME_LOGARITHMIC = "theta_log_n"
    REGIME_POWER_LAW = "power_law"
    HUB_ZERO = "zero"
    HUB_ONE = "one"
    NOTE_THEOREM_BOUND = "theorem_bound"
    NOTE_HARMONIC_CLOSED_FORM = "harmonic_closed_form"
    NOTE_STAR_MODE_SUM = "star_mode_sum"
    NOTE_STAR_DOMINANT_TERM = "star_dominant_term"
    NOTE_CLOSED_FORM_DELTA = "closed_form_delta"
    NOTE_ER_PHI_INVERSE_BOUND = "er_phi_inverse_bound"
    NOTE_MARGIN_ASYMPTOTICS = "margin_asymptotics"


class JSON_CONFIG:
    """
    JSON properties of the serialized results
    """
    JSON_DELTA = "delta"
    JSON_ARGMIN_SUBSET = "argmin_subset"
    JSON_METHOD = "method"
    JSON_SUBSET_SIZE = "subset_size"

    JSON_GRAPH_FAMILY = "graph_family"
    JSON_N = "n"
    JSON_S0 = "s0"
    JSON_S1 = "s1"
    JSON_BOUND_T1 = "bound_t1"
    JSON_BOUND_T2 = "bound_t2"
    JSON_BOUND_TOTAL = "bound_total"
    JSON_EXACT_T1 = "exact_t1"
    JSON_DOMINANT_TERM = "dominant_term"
    JSON_NOTES = "notes"

    JSON_TRIALS = "trials"
    JSON_MEAN_T1 = "mean_t1"
    JSON_MEAN_T2 = "mean_t2"
    JSON_CI95_T1 = "ci95_t1"
    JSON_CI95_T2 = "ci95_t2"
    JSON_SEED = "seed"
    JSON_TRUNCATED = "truncated"
    JSON_T2_USABLE = "t2_usable"

    JSON_METADATA = "metadata"
    JSON_ROWS = "rows"
    JSON_GENERATED_AT = "generated_at"


class CSV_CONFIG:
    """
    CSV output format
    """
    FLOAT_FORMAT = "%.12g"
    METADATA_PREFIX = "# "
    SIM_COLUMNS = ["n", "s0", "s1", "mean_t1", "ci_t1", "mean_t2", "ci_t2", "bound_t1", "exact_t1"]
    SWEEP_COLUMNS = ["alpha", "margin", "n", "s0", "s1", "mean_t1", "ci_t1", "mean_t2", "ci_t2",
                     "bound_t1", "exact_t1", "dominant_term"]
    SURVIVAL_COLUMNS = ["time", "phase1_survival", "phase2_survival", "tail_bound"]
    BOUNDS_COLUMNS = ["n", "s0", "s1", "delta", "bound_t1", "bound_t2", "bound_total"]


class CLI:
    """
    Command line driver constants
    """
    PROG = "consensus"
    SUBCOMMAND_SIM = "sim"
    SUBCOMMAND_DELTA = "delta"
    SUBCOMMAND_BOUNDS = "bounds"
    SUBCOMMAND_ANALYTIC = "analytic"
    SUBCOMMAND_SURVIVAL = "survival"
    SUBCOMMAND_SWEEP = "sweep"
    FORMAT_CSV = "csv"
    FORMAT_JSON = "json"
    EXIT_OK = 0
    EXIT_FAILURE = 1
    EXIT_USAGE = 2
    DEFAULT_TRIALS = 100
    DEFAULT_SEED = 0
    DEFAULT_GRID_POINTS = 20


class DELIMITERS:
    """
    String delimiters constants
    """
    COLON_DELIMITER = ":"
    COMMA_DELIMITER = ","
    NEWLINE_DELIMITER = "\n"

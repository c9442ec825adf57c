"""

Miscellaneous utility functions: environment configuration, logging setup and result writers.

"""

import datetime
import json
import logging
import os
import sys

from consensus import constants


def max_enumeration_n():
    """
    Get the largest graph size for which exhaustive subset enumeration is attempted. The default guard can be
    overridden with the CONSENSUS_MAX_N environment variable, a warning is logged whenever the override is used.

    Returns:
        the enumeration guard (number of nodes)

    Raises:
        :ValueError: if the environment variable is not a positive integer
    """
    value = os.environ.get(constants.ENV_VARIABLES.MAX_N_ENV_VAR)
    if value is None:
        return constants.SPECTRAL.MAX_ENUMERATION_N
    try:
        max_n = int(value)
    except ValueError:
        raise ValueError("{} must be an integer, got: {}".format(constants.ENV_VARIABLES.MAX_N_ENV_VAR, value))
    if max_n < 1:
        raise ValueError("{} must be positive, got: {}".format(constants.ENV_VARIABLES.MAX_N_ENV_VAR, max_n))
    max_n = min(max_n, constants.SPECTRAL.MAX_MASK_BITS)
    logging.getLogger(constants.LOGGING.LOGGER_NAME).warning(
        "Enumeration guard overridden by %s: exhaustive subset enumeration allowed up to n=%d",
        constants.ENV_VARIABLES.MAX_N_ENV_VAR, max_n)
    return max_n


def log_level():
    """
    Extracts the library log level from the environment

    Returns:
        the log level name, defaults to WARNING
    """
    return os.environ.get(constants.ENV_VARIABLES.LOG_LEVEL_ENV_VAR, constants.LOGGING.DEFAULT_LEVEL).upper()


def setup_logging(level=None, stream=None):
    """
    Attaches a stream handler to the library logger. Called by the command line driver, library users configure
    logging themselves.

    Args:
        :level: the log level name, defaults to the level from the environment
        :stream: the stream to log to, defaults to stderr

    Returns:
        the configured logger
    """
    logger = logging.getLogger(constants.LOGGING.LOGGER_NAME)
    logger.setLevel(level or log_level())
    if not logger.handlers:
        handler = logging.StreamHandler(stream or sys.stderr)
        handler.setFormatter(logging.Formatter(constants.LOGGING.FORMAT, datefmt=constants.LOGGING.DATE_FORMAT))
        logger.addHandler(handler)
    return logger


def timestamp():
    """
    Returns:
        the current UTC time in ISO-8601 format, only ever written to output metadata
    """
    return datetime.datetime.now(datetime.timezone.utc).replace(microsecond=0, tzinfo=None).isoformat() + "Z"


def _metadata_lines(metadata):
    lines = []
    for key in sorted(metadata.keys()):
        value = metadata[key]
        if isinstance(value, (list, tuple)):
            value = constants.DELIMITERS.COMMA_DELIMITER.join(str(v) for v in value)
        lines.append(constants.CSV_CONFIG.METADATA_PREFIX + "{}={}".format(key, value))
    return lines


def render_csv(dataframe, metadata):
    """
    Renders a result table as CSV text, preceded by `# key=value` metadata lines

    Args:
        :dataframe: pandas dataframe with the result rows
        :metadata: dict with the metadata of the experiment

    Returns:
        the CSV text
    """
    body = dataframe.to_csv(index=False, float_format=constants.CSV_CONFIG.FLOAT_FORMAT,
                            lineterminator=constants.DELIMITERS.NEWLINE_DELIMITER)
    header = constants.DELIMITERS.NEWLINE_DELIMITER.join(_metadata_lines(metadata))
    if header:
        header = header + constants.DELIMITERS.NEWLINE_DELIMITER
    return header + body


def render_json(payload, metadata):
    """
    Renders a result as JSON text with a metadata block

    Args:
        :payload: JSON-serializable result (a dict or a list of row dicts)
        :metadata: dict with the metadata of the experiment

    Returns:
        the JSON text
    """
    document = {constants.JSON_CONFIG.JSON_METADATA: metadata, constants.JSON_CONFIG.JSON_ROWS: payload}
    return json.dumps(document, indent=2, sort_keys=True) + constants.DELIMITERS.NEWLINE_DELIMITER


def write_output(text, path=None):
    """
    Writes rendered output to a file, or to stdout when no path is given

    Args:
        :text: the rendered output
        :path: the output path (optional)

    Returns:
        None
    """
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf8") as f:
        f.write(text)

"""
CSV writers for campaign results. Every file has a header row, LF line endings
and reals in ``repr`` form, which round-trips exactly.
"""
import csv
import os

import numpy as np

from helpers.logger import setup_logger

logger = setup_logger(__name__, "warning")

RESULTS_HEADER = ["algorithm", "problem", "dim", "run_index", "seed", "best_fitness", "best_position", "evaluations", "wall_ms"]
SUMMARY_HEADER = ["algorithm", "problem", "dim", "runs", "mean", "std", "best", "median", "worst"]
TRACE_HEADER = ["iteration", "best_so_far"]
STATS_HEADER = ["kind", "baseline", "algorithm", "problem", "dim", "statistic", "p_value", "verdict",
                "avg_rank", "wins", "ties", "losses", "not_worse_ratio"]
RANK_PLACES = 3
RANKS_HEADER = ["algorithm", "avg_rank", "first", "second", "third", "worse"]


def format_value(value):
    """
    >>> format_value(0.1), format_value(3), format_value(None), format_value(np.float64(2.5))
    ('0.1', '3', '', '2.5')
    """
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def format_position(position):
    """Position vector as one cell: reals separated by spaces."""
    return " ".join(format_value(float(v)) for v in np.asarray(position).ravel())


def write_csv(path, header, rows):
    directory = os.path.dirname(path)
    if directory and not os.path.isdir(directory):
        os.makedirs(directory)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(value) for value in row])
    logger.debug("Wrote {} rows to {}".format(len(rows), path))


def write_trace(path, trace):
    """Writes a ``ConvergenceTrace`` as (iteration, best_so_far) rows."""
    write_csv(path, TRACE_HEADER, trace.rows())

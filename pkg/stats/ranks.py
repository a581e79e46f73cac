import numpy as np
from scipy.stats import rankdata

from core.errors import InvalidArgumentError


def rank_data(values):
    """
    Fractional ranks, 1 for the lowest value; tied values share the mean of
    the ranks they span.

    >>> rank_data([10.0, 30.0, 20.0, 20.0]).tolist()
    [1.0, 4.0, 2.5, 2.5]
    """
    return rankdata(np.asarray(values, dtype=float), method="average")


def tie_sizes(values):
    """Sizes of the groups of equal values."""
    _, counts = np.unique(np.asarray(values, dtype=float), return_counts=True)
    return counts


def rank_table(results):
    """
    Ranks algorithms within every row of a problems x algorithms matrix
    (lower value ranks first, ties get average ranks).
    """
    results = np.asarray(results, dtype=float)
    if results.ndim != 2 or results.shape[0] < 1 or results.shape[1] < 1:
        raise InvalidArgumentError("Rank table needs a non-empty problems x algorithms matrix, got shape {}".format(results.shape))
    return np.array([rank_data(row) for row in results])


def rank_distribution(ranks, places=3):
    """
    How often each algorithm (column) took each place: a ``(k, places + 1)``
    integer matrix counting 1st, 2nd, ... and, in the last column, anything
    worse. A tied rank counts towards the better place it shares (rank 1.5
    is a first place).
    """
    ranks = np.asarray(ranks, dtype=float)
    positions = np.minimum(np.floor(ranks).astype(int), places + 1) - 1
    counts = np.zeros((ranks.shape[1], places + 1), dtype=int)
    for column in range(ranks.shape[1]):
        counts[column] = np.bincount(positions[:, column], minlength=places + 1)
    return counts

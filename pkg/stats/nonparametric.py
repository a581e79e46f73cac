"""
Rank-based comparisons of final results: the two-sided Wilcoxon rank-sum
test for pairs of algorithms and the Friedman test over many problems.
"""
import itertools
from collections import namedtuple

import numpy as np
from scipy.special import gammaincc, ndtr

from core.errors import InvalidArgumentError
from stats.descriptive import as_values
from stats.ranks import rank_data, rank_table, tie_sizes
from helpers.logger import setup_logger

logger = setup_logger(__name__, "warning")

SIGNIFICANCE = 0.05
EXACT_LIMIT = 12

WIN = "win"
TIE = "tie"
LOSS = "loss"
VERDICT_SYMBOLS = {WIN: "+", TIE: "=", LOSS: "-"}


class TestResult(namedtuple("TestResult", ["statistic", "p_value", "verdict"])):
    """Outcome of a rank-sum test, verdict from the point of view of the first sample."""
    __test__ = False

    @property
    def symbol(self):
        return VERDICT_SYMBOLS[self.verdict]


FriedmanResult = namedtuple("FriedmanResult", ["statistic", "p_value", "avg_ranks"])
WinTieLoss = namedtuple("WinTieLoss", ["wins", "ties", "losses"])


def exact_rank_sum_p(rank_sum, n_x, n_total):
    """Two-sided p of a rank sum, enumerating every way to pick ``n_x`` of ``n_total`` untied ranks."""
    expected = n_x * (n_total + 1) / 2.0
    observed = abs(rank_sum - expected)
    extreme = total = 0
    for combination in itertools.combinations(range(1, n_total + 1), n_x):
        total += 1
        # rank sums are integers here, so comparing with a half-unit margin is exact
        if abs(sum(combination) - expected) >= observed - 0.25:
            extreme += 1
    return float(extreme) / total


def normal_rank_sum_p(rank_sum, n_x, n_y, ranks):
    """Two-sided p from the normal approximation with tie and continuity corrections."""
    n = n_x + n_y
    expected = n_x * (n + 1) / 2.0
    ties = tie_sizes(ranks)
    variance = n_x * n_y / 12.0 * ((n + 1) - float(np.sum(ties ** 3 - ties)) / (n * (n - 1)))
    if variance <= 0:
        return 1.0
    z = max(abs(rank_sum - expected) - 0.5, 0.0) / np.sqrt(variance)
    return float(min(1.0, 2.0 * ndtr(-z)))


def wilcoxon_rank_sum(x, y, alpha=SIGNIFICANCE):
    # type: (SampleSet, SampleSet, float) -> TestResult
    """
    Two-sided Wilcoxon rank-sum test of ``x`` against ``y`` (lower is better).
    The statistic is the rank sum of ``x``. Without ties and with at most 12
    values in total the p-value is exact, otherwise it comes from the normal
    approximation with tie and continuity corrections.

    The verdict is ``tie`` if p >= alpha; otherwise ``win`` if ``x`` has the
    lower median, ``loss`` if it has the higher one, and on equal medians the
    lower mean rank wins.
    """
    x, y = as_values(x), as_values(y)
    n_x, n_y = x.size, y.size
    ranks = rank_data(np.concatenate([x, y]))
    rank_sum = float(np.sum(ranks[:n_x]))
    if n_x + n_y <= EXACT_LIMIT and np.all(tie_sizes(ranks) == 1):
        p_value = exact_rank_sum_p(rank_sum, n_x, n_x + n_y)
    else:
        p_value = normal_rank_sum_p(rank_sum, n_x, n_y, ranks)
    if p_value >= alpha:
        verdict = TIE
    else:
        median_x, median_y = np.median(x), np.median(y)
        if median_x == median_y:
            median_x, median_y = rank_sum / n_x, float(np.sum(ranks[n_x:])) / n_y
        verdict = WIN if median_x < median_y else LOSS
    return TestResult(statistic=rank_sum, p_value=p_value, verdict=verdict)


def friedman(results):
    # type: (np.ndarray) -> FriedmanResult
    """
    Friedman test over a problems x algorithms matrix (lower is better).
    Returns the chi-square statistic, its p-value with k - 1 degrees of
    freedom and the average rank of every algorithm.
    """
    results = np.asarray(results, dtype=float)
    if results.ndim != 2 or results.shape[0] < 2 or results.shape[1] < 2:
        raise InvalidArgumentError("Friedman test needs at least 2 problems and 2 algorithms, got shape {}".format(results.shape))
    n, k = results.shape
    avg_ranks = rank_table(results).mean(axis=0)
    statistic = 12.0 * n / (k * (k + 1)) * float(np.sum((avg_ranks - (k + 1) / 2.0) ** 2))
    p_value = float(gammaincc((k - 1) / 2.0, statistic / 2.0))
    return FriedmanResult(statistic=statistic, p_value=p_value, avg_ranks=avg_ranks)


def win_tie_loss(base, results):
    """
    Counts the verdicts of ``base`` against its competitors, one
    ``TestResult`` per problem (each from ``wilcoxon_rank_sum(base, other)``).
    ``results`` may be a list or a dict keyed by problem.
    """
    if isinstance(results, dict):
        results = list(results.values())
    verdicts = [result.verdict for result in results]
    counts = WinTieLoss(wins=verdicts.count(WIN), ties=verdicts.count(TIE), losses=verdicts.count(LOSS))
    logger.debug("{}: +{} ={} -{}".format(base, *counts))
    return counts


def not_worse_ratio(counts):
    """Share of problems where the base algorithm won or tied."""
    total = counts.wins + counts.ties + counts.losses
    if total == 0:
        raise InvalidArgumentError("No comparisons to take a ratio of")
    return float(counts.wins + counts.ties) / total

from collections import namedtuple

import numpy as np

from core.errors import InvalidArgumentError

Summary = namedtuple("Summary", ["mean", "std", "best", "median", "worst", "runs"])


class SampleSet(object):
    """Final best values of all runs of one algorithm on one problem."""

    def __init__(self, values, algorithm="", problem=""):
        values = np.array(values, dtype=float).ravel()
        if values.size == 0:
            raise InvalidArgumentError("SampleSet of {} on {} is empty".format(algorithm or "?", problem or "?"))
        self.values = values
        self.algorithm = algorithm
        self.problem = problem

    def __len__(self):
        return self.values.size

    def __repr__(self):
        return "SampleSet({}, {}, n={})".format(self.algorithm, self.problem, len(self))


def as_values(samples):
    if isinstance(samples, SampleSet):
        return samples.values
    return SampleSet(samples).values


def summarize(samples):
    # type: (SampleSet) -> Summary
    """
    Mean, sample standard deviation (n - 1 denominator, 0 for a single run),
    best (minimum), median and worst (maximum).

    >>> summarize([1.0, 2.0, 3.0])[:3]
    (2.0, 1.0, 1.0)
    """
    values = as_values(samples)
    std = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    return Summary(mean=float(np.mean(values)), std=std, best=float(np.min(values)),
                   median=float(np.median(values)), worst=float(np.max(values)), runs=int(values.size))

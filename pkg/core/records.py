from collections import namedtuple

import numpy as np

from core.errors import InvalidArgumentError

DEFAULT_POPULATION_SIZE = 30
DEFAULT_MAX_ITERATIONS = 500
DEFAULT_RUNS = 51


class RunConfig(object):
    """
    Settings of a single run (and the defaults of a campaign): population size,
    number of iterations T, number of runs, base seed and the strategy set.
    ``strategy`` is a ``msigoa.StrategyConfig``; ``None`` stands for plain GOA.
    """

    def __init__(self, population_size=DEFAULT_POPULATION_SIZE, max_iterations=DEFAULT_MAX_ITERATIONS,
                 runs=DEFAULT_RUNS, seed=0, strategy=None):
        if int(population_size) < 2:
            raise InvalidArgumentError("population_size must be at least 2, got {}".format(population_size))
        if int(max_iterations) < 1:
            raise InvalidArgumentError("max_iterations must be at least 1, got {}".format(max_iterations))
        if int(runs) < 1:
            raise InvalidArgumentError("runs must be at least 1, got {}".format(runs))
        if int(seed) < 0:
            raise InvalidArgumentError("seed must be non-negative, got {}".format(seed))
        self.population_size = int(population_size)
        self.max_iterations = int(max_iterations)
        self.runs = int(runs)
        self.seed = int(seed)
        self.strategy = strategy

    def replace(self, **kwargs):
        values = dict(population_size=self.population_size, max_iterations=self.max_iterations,
                      runs=self.runs, seed=self.seed, strategy=self.strategy)
        values.update(kwargs)
        return RunConfig(**values)

    def __repr__(self):
        return "RunConfig(population_size={}, max_iterations={}, runs={}, seed={}, strategy={!r})".format(
            self.population_size, self.max_iterations, self.runs, self.seed, self.strategy)


class ConvergenceTrace(object):
    """Best-so-far penalized objective after each iteration; never increases."""

    def __init__(self, max_iterations):
        self.best_so_far = np.full(max_iterations, np.nan)
        self._length = 0

    def record(self, value):
        if self._length == self.best_so_far.size:
            raise InvalidArgumentError("Trace already holds {} iterations".format(self._length))
        if self._length and value > self.best_so_far[self._length - 1]:
            raise InvalidArgumentError("Best-so-far went up from {} to {}".format(self.best_so_far[self._length - 1], value))
        self.best_so_far[self._length] = value
        self._length += 1

    def __len__(self):
        return self._length

    def values(self):
        return self.best_so_far[:self._length].copy()

    def rows(self):
        """(iteration, best_so_far) pairs, iterations counted from 1."""
        return [(t + 1, float(v)) for t, v in enumerate(self.best_so_far[:self._length])]


RunRecord = namedtuple("RunRecord", ["algorithm", "problem", "dimension", "seed",
                                     "best_fitness", "best_position", "evaluations"])

import numpy as np

from core.errors import InvalidArgumentError


class Bounds(object):
    """
    Per-dimension box of the search space. ``lower`` and ``upper`` are copied
    into read-only float arrays.
    """

    def __init__(self, lower, upper):
        lower = np.array(lower, dtype=float, ndmin=1)
        upper = np.array(upper, dtype=float, ndmin=1)
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise InvalidArgumentError("Bounds need two vectors of equal length, got shapes {} and {}".format(lower.shape, upper.shape))
        if lower.size < 1:
            raise InvalidArgumentError("Bounds need at least one dimension")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise InvalidArgumentError("Bounds must be finite")
        if np.any(lower > upper):
            bad = int(np.argmax(lower > upper))
            raise InvalidArgumentError("Lower bound {} exceeds upper bound {} in dimension {}".format(lower[bad], upper[bad], bad))
        lower.setflags(write=False)
        upper.setflags(write=False)
        self.lower = lower
        self.upper = upper

    @classmethod
    def uniform(cls, low, high, dimension):
        # type: (float, float, int) -> Bounds
        return cls(np.full(dimension, low, dtype=float), np.full(dimension, high, dtype=float))

    @property
    def dimension(self):
        return self.lower.size

    @property
    def width(self):
        return self.upper - self.lower

    def contains(self, position):
        position = np.asarray(position, dtype=float)
        return bool(np.all(position >= self.lower) and np.all(position <= self.upper))

    def __repr__(self):
        return "Bounds(lower={}, upper={})".format(self.lower.tolist(), self.upper.tolist())


class Agent(object):
    """A candidate position together with its (penalized) fitness."""

    def __init__(self, position, fitness):
        self.position = np.array(position, dtype=float)
        self.fitness = float(fitness)

    def copy(self):
        return Agent(self.position, self.fitness)

    def __repr__(self):
        return "Agent(fitness={!r}, position={})".format(self.fitness, self.position.tolist())


class Population(object):
    """
    The N x D matrix of agent positions with their cached fitness values
    and the elite, a best-so-far snapshot that never gets worse.

    Positions live in one array so that update rules can work on blocks of
    agents; ``agents`` and ``agent(i)`` give per-agent snapshots.
    """

    def __init__(self, positions, fitness, elite=None):
        positions = np.array(positions, dtype=float)
        fitness = np.array(fitness, dtype=float)
        if positions.ndim != 2 or fitness.shape != (positions.shape[0],):
            raise InvalidArgumentError("Population needs an N x D matrix and N fitness values, got {} and {}".format(positions.shape, fitness.shape))
        if positions.shape[0] < 2:
            raise InvalidArgumentError("Population needs at least 2 agents, got {}".format(positions.shape[0]))
        self.positions = positions
        self.fitness = fitness
        if elite is None:
            best = self.best_index()
            elite = Agent(positions[best], fitness[best])
        self.elite = elite.copy()
        self.update_elite()

    @property
    def size(self):
        return self.positions.shape[0]

    @property
    def dimension(self):
        return self.positions.shape[1]

    @property
    def agents(self):
        return [self.agent(i) for i in range(self.size)]

    def agent(self, index):
        return Agent(self.positions[index], self.fitness[index])

    def best_index(self):
        # argmin returns the first of equal minima, which keeps ties deterministic
        return int(np.argmin(self.fitness))

    def update_elite(self):
        """Replaces the elite if some agent is strictly better. Returns True if it did."""
        best = self.best_index()
        if self.fitness[best] < self.elite.fitness:
            self.elite = Agent(self.positions[best], self.fitness[best])
            return True
        return False

    def accept(self, indices, candidates, candidate_fitness):
        """
        Greedy acceptance: agent ``indices[k]`` moves to ``candidates[k]`` only if
        ``candidate_fitness[k]`` is strictly lower than its current fitness.
        Returns the boolean mask of accepted moves.
        """
        indices = np.asarray(indices, dtype=int)
        candidate_fitness = np.asarray(candidate_fitness, dtype=float)
        improved = candidate_fitness < self.fitness[indices]
        accepted = indices[improved]
        self.positions[accepted] = np.asarray(candidates, dtype=float)[improved]
        self.fitness[accepted] = candidate_fitness[improved]
        self.update_elite()
        return improved

    def replace(self, index, position, fitness):
        """Unconditionally moves an agent."""
        self.positions[index] = position
        self.fitness[index] = fitness

    def copy(self):
        return Population(self.positions.copy(), self.fitness.copy(), self.elite)


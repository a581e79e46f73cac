from collections import deque

import numpy as np

from core.errors import InvalidArgumentError
from core.population import Agent


class DominantArchive(object):
    """
    FIFO buffer of good positions from recent iterations. Holds at most
    ``capacity`` snapshots; appending to a full archive drops the oldest.
    """

    def __init__(self, capacity):
        if int(capacity) < 1:
            raise InvalidArgumentError("Archive capacity must be positive, got {}".format(capacity))
        self.capacity = int(capacity)
        self._members = deque(maxlen=self.capacity)

    def append(self, position, fitness):
        self._members.append(Agent(position, fitness))

    @property
    def members(self):
        """Copies of the members, oldest first."""
        return [member.copy() for member in self._members]

    def __len__(self):
        return len(self._members)

    def __bool__(self):
        return bool(self._members)

    def ranked(self):
        """(positions, fitness) of the members sorted by fitness, ties in insertion order."""
        fitness = np.array([member.fitness for member in self._members])
        positions = np.array([member.position for member in self._members])
        order = np.argsort(fitness, kind="stable")
        return positions[order], fitness[order]

    def __repr__(self):
        return "DominantArchive({}/{})".format(len(self), self.capacity)


def archive_update(archive, population):
    # type: (DominantArchive, Population) -> DominantArchive
    """Appends the best ceil(N/2) agents, best first, as snapshots."""
    count = (population.size + 1) // 2
    for index in np.argsort(population.fitness, kind="stable")[:count]:
        archive.append(population.positions[index], population.fitness[index])
    return archive

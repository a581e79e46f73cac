import numpy as np

from core.errors import InvalidArgumentError


class RngStream(object):
    """
    The single source of randomness for one run. Wraps a numpy ``Generator``
    backed by ``PCG64``, so a given seed yields the same draws on every
    platform for a given numpy release.

    Block draws (``size=(k, D)``) are filled row-major: drawing a ``(k, D)``
    block consumes the stream exactly like ``k`` consecutive ``D``-sized draws.
    Every operation that consumes the stream documents its draw order.
    """

    def __init__(self, seed):
        seed = int(seed)
        if seed < 0 or seed >= 2**64:
            raise InvalidArgumentError("Seed must be a 64-bit unsigned integer, got {}".format(seed))
        self.seed = seed
        self._generator = np.random.Generator(np.random.PCG64(seed))

    def uniform(self, size=None):
        """Uniform draw(s) in [0, 1)."""
        return self._generator.random(size)

    def normal(self, size=None):
        """Standard normal draw(s)."""
        return self._generator.standard_normal(size)

    def pair(self, n):
        """Two distinct indices out of ``range(n)``, uniformly without replacement."""
        if n < 2:
            raise InvalidArgumentError("Cannot pick two distinct indices out of {}".format(n))
        a, b = self._generator.choice(n, size=2, replace=False)
        return int(a), int(b)

    def __repr__(self):
        return "RngStream(seed={})".format(self.seed)

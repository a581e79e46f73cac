import numpy as np
from scipy.special import gamma

from core.errors import InvalidArgumentError
from helpers.logger import setup_logger

logger = setup_logger(__name__, "warning")

DEFAULT_LEVY_ALPHA = 1.5
DEFAULT_LEVY_SCALE = 0.05


def _shape(d, count):
    if int(d) < 1:
        raise InvalidArgumentError("Motion vectors need d >= 1, got {}".format(d))
    if count is None:
        return (int(d),)
    if int(count) < 1:
        raise InvalidArgumentError("Motion blocks need at least one row, got {}".format(count))
    return (int(count), int(d))


def brownian_vector(rng, d, count=None):
    # type: (RngStream, int, int) -> np.ndarray
    """
    Standard normal steps: a vector of length ``d``, or a ``count`` x ``d``
    block (one row per agent) when ``count`` is given.
    """
    return rng.normal(_shape(d, count))


def mantegna_sigma(alpha):
    # type: (float) -> float
    """
    Scale of the numerator normal in Mantegna's algorithm (denominator normal
    has unit scale):

        sigma_z = [gamma(1+a) * sin(pi*a/2) / (gamma((1+a)/2) * a * 2^((a-1)/2))]^(1/a)

    ``alpha`` has to lie in (0, 2]. For ``alpha`` = 2 the sine vanishes and the
    result is 0, which is why ``LevyParams`` does not accept it.

    >>> round(mantegna_sigma(1.5), 10)
    0.6965745026
    >>> mantegna_sigma(1.0)
    1.0
    """
    alpha = float(alpha)
    if not 0.0 < alpha <= 2.0:
        raise InvalidArgumentError("Levy stability index must be in (0, 2], got {}".format(alpha))
    if alpha == 2.0:
        return 0.0
    numerator = gamma(1.0 + alpha) * np.sin(np.pi * alpha / 2.0)
    denominator = gamma((1.0 + alpha) / 2.0) * alpha * 2.0 ** ((alpha - 1.0) / 2.0)
    return float((numerator / denominator) ** (1.0 / alpha))


class LevyParams(object):
    """
    Parameters of the Levy steps: stability index ``alpha`` in (0, 2),
    ``scale`` multiplying every step and the derived ``sigma_z``.
    """

    def __init__(self, alpha=DEFAULT_LEVY_ALPHA, scale=DEFAULT_LEVY_SCALE):
        alpha = float(alpha)
        if not 0.0 < alpha < 2.0:
            raise InvalidArgumentError("Levy steps need 0 < alpha < 2 (alpha = 2 has sigma_z = 0), got {}".format(alpha))
        if not float(scale) > 0:
            raise InvalidArgumentError("Levy scale must be positive, got {}".format(scale))
        self.alpha = alpha
        self.scale = float(scale)
        self.sigma_z = mantegna_sigma(alpha)

    def __eq__(self, other):
        return isinstance(other, LevyParams) and (self.alpha, self.scale) == (other.alpha, other.scale)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "LevyParams(alpha={}, scale={})".format(self.alpha, self.scale)


def levy_vector(rng, d, params=None, count=None):
    """
    Levy-flight steps via Mantegna's algorithm: ``scale * z / |y|^(1/alpha)``
    with ``z ~ N(0, sigma_z^2)`` and ``y ~ N(0, 1)``.

    Draws ``normal`` for all of z, then ``normal`` for all of y; entries of y
    that come out exactly 0 are redrawn, in order, until none is left.
    """
    if params is None:
        params = LevyParams()
    shape = _shape(d, count)
    z = rng.normal(shape) * params.sigma_z
    y = rng.normal(shape)
    zeros = y == 0.0
    while np.any(zeros):
        logger.debug("Redrawing {} zero denominator(s)".format(int(np.sum(zeros))))
        y[zeros] = rng.normal(int(np.sum(zeros)))
        zeros = y == 0.0
    return params.scale * z / np.abs(y) ** (1.0 / params.alpha)

import numpy as np

from core.errors import InvalidArgumentError, InvalidStateError
from core.problem import clamp, evaluate_many
from helpers.logger import setup_logger

logger = setup_logger(__name__, "warning")


def dprm_weights(n):
    # type: (int) -> np.ndarray
    """
    Log-decreasing weights for ``n`` members ranked best to worst:
    ``w_i = (ln(n + 0.5) - ln i) / sum_k (ln(n + 0.5) - ln k)``.
    """
    if int(n) < 1:
        raise InvalidArgumentError("Weights need at least one member, got {}".format(n))
    raw = np.log(n + 0.5) - np.log(np.arange(1, int(n) + 1))
    return raw / raw.sum()


def dprm_center_and_sample(archive, rng, count=None):
    """
    Weighted center ``x_d`` of the archive and Gaussian noise ``g`` shaped by
    the spread of the archive around it:

        g = sum_k eta_k (X_k - x_d) / sqrt(n),   eta_k ~ N(0, 1)

    so that ``cov(g) = (1/n) sum_k (X_k - x_d)(X_k - x_d)^T`` with no matrix
    factorization. Returns one noise vector, or a ``count`` x D block when
    ``count`` is given. Draws: normal(n), or normal((count, n)), row-major.
    """
    if not archive:
        raise InvalidStateError("Cannot sample from an empty dominant archive")
    members, _ = archive.ranked()
    n = members.shape[0]
    center = dprm_weights(n) @ members
    deviations = members - center
    eta = rng.normal(n if count is None else (int(count), n))
    return center, eta @ deviations / np.sqrt(n)


def dprm_restart(population, archive, rng, problem, restart_mask=None):
    """
    Moves every agent (or those selected by ``restart_mask``) to

        (X_i + x_d + Elite) / 3 + g_i

    with fresh noise ``g_i`` per agent, then clamps, evaluates and keeps the
    candidates that improve. ``x_d`` and the elite are taken before any agent
    moves; noise is drawn for all agents regardless of the mask. An empty
    archive skips the restart.
    """
    if not archive:
        logger.debug("Dominant archive is empty, skipping restart")
        return population
    elite = population.elite.position.copy()
    center, noise = dprm_center_and_sample(archive, rng, population.size)
    candidates = (population.positions + center + elite) / 3.0 + noise
    indices = np.arange(population.size)
    if restart_mask is not None:
        indices = indices[np.asarray(restart_mask, dtype=bool)]
        candidates = candidates[indices]
    if indices.size == 0:
        return population
    candidates = clamp(candidates, problem.bounds)
    accepted = population.accept(indices, candidates, evaluate_many(problem, candidates))
    logger.debug("Restart moved {} of {} agents".format(int(np.sum(accepted)), indices.size))
    return population

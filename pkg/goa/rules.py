"""
Gazelle update rules. Each step takes either one position (shape ``(D,)``)
or a block of positions (shape ``(k, D)``, one agent per row) and returns the
moved position(s) without clamping or evaluating them. Random draws are taken
block-wise, row-major, in the order listed in each docstring.
"""
import numpy as np

from core.errors import InvalidStateError
from core.population import Population
from core.problem import clamp, evaluate, evaluate_many
from stochastics import brownian_vector, levy_vector, cf_factor, apts_scale_brownian, apts_scale_levy
from stochastics.schedules import check_iteration
from helpers.logger import setup_logger

logger = setup_logger(__name__, "warning")


def _count(positions):
    return None if positions.ndim == 1 else positions.shape[0]


def direction(t):
    """+1 on odd iterations, -1 on even ones."""
    return 1.0 if t % 2 == 1 else -1.0


def brownian_motion(rng, positions, params, t, T):
    rb = brownian_vector(rng, positions.shape[-1], _count(positions))
    if params.apts:
        rb = apts_scale_brownian(rb, t, T, params.apts_brownian_exponent)
    return rb


def levy_motion(rng, positions, params, t, T):
    rl = levy_vector(rng, positions.shape[-1], params.levy, _count(positions))
    if params.apts:
        rl = apts_scale_levy(rl, t, T)
    return rl


def initialize(rng, problem, n):
    # type: (RngStream, Problem, int) -> Population
    """Uniform sampling in the box, drawn as one ``(n, D)`` block, then evaluation."""
    bounds = problem.bounds
    positions = bounds.lower + rng.uniform((int(n), bounds.dimension)) * bounds.width
    return Population(positions, evaluate_many(problem, positions))


def exploit_step(positions, elite, rng, params, t, T):
    """
    Grazing with Brownian motion:

        X + s * rand * R_b * (Elite - R_b * X)

    Draws: uniform (rand), normal (R_b).
    """
    check_iteration(t, T)
    positions = np.asarray(positions, dtype=float)
    rand = rng.uniform(positions.shape)
    rb = brownian_motion(rng, positions, params, t, T)
    return positions + params.s * rand * rb * (elite - rb * positions)


def explore_levy_step(positions, elite, rng, params, t, T):
    """
    Levy flight before the predator is spotted:

        X + s * mu * rand * R_L * (Elite - R_L * X)

    Draws: uniform (rand), Levy (R_L).
    """
    check_iteration(t, T)
    positions = np.asarray(positions, dtype=float)
    rand = rng.uniform(positions.shape)
    rl = levy_motion(rng, positions, params, t, T)
    return positions + params.s * direction(t) * rand * rl * (elite - rl * positions)


def explore_brownian_step(positions, elite, rng, params, t, T):
    """
    Brownian flight after the predator is spotted:

        Elite + s * mu * CF * R_b * (R_L * Elite - X)

    Draws: normal (R_b), Levy (R_L).
    """
    check_iteration(t, T)
    positions = np.asarray(positions, dtype=float)
    rb = brownian_motion(rng, positions, params, t, T)
    rl = levy_motion(rng, positions, params, t, T)
    cf = cf_factor(t, T, params.cf_variant)
    return elite + params.s * direction(t) * cf * rb * (rl * elite - positions)


def converge_step(positions, elite, rng, params, t, T):
    """
    Late-stage convergence on the elite, the Brownian flight with R_b replaced
    by the same R_L that multiplies the elite:

        Elite + s * mu * CF * R_L * (R_L * Elite - X)

    Draws: Levy (R_L).
    """
    check_iteration(t, T)
    positions = np.asarray(positions, dtype=float)
    rl = levy_motion(rng, positions, params, t, T)
    cf = cf_factor(t, T, params.cf_variant)
    return elite + params.s * direction(t) * cf * rl * (rl * elite - positions)


def escape_step(population, rng, params, t, T, problem):
    # type: (Population, RngStream, GoaParams, int, int, Problem) -> Population
    """
    Predator escape, applied to every agent in order. For agent i, draws r2:

     * ``r2 <= psr``: a masked uniform jump, ``X + CF * U * (Lb + rand * (Ub - Lb))``,
       where ``U_j`` is 0 if its uniform draw is below ``mask_threshold`` and 1 otherwise.
       Draws: uniform(D) for U, uniform(D) for rand.
     * otherwise: ``X + (psr * (1 - r1) + r1) * (X_A - X_B)`` with A != B picked
       uniformly out of the population as it was before the escape sweep.
       Draws: uniform r1, then the pair.

    The escaped position is clamped, evaluated and replaces the agent
    unconditionally; the elite is updated once all agents moved.
    """
    check_iteration(t, T)
    n = population.size
    if n < 2:
        raise InvalidStateError("Escape needs two distinct agents, population has {}".format(n))
    bounds = problem.bounds
    cf = cf_factor(t, T, params.cf_variant)
    snapshot = population.positions.copy()
    jumps = 0
    for i in range(n):
        x = snapshot[i]
        r2 = rng.uniform()
        if r2 <= params.psr:
            mask = (rng.uniform(bounds.dimension) >= params.mask_threshold).astype(float)
            rand = rng.uniform(bounds.dimension)
            moved = x + cf * mask * (bounds.lower + rand * bounds.width)
            jumps += 1
        else:
            r1 = rng.uniform()
            a, b = rng.pair(n)
            moved = x + (params.psr * (1.0 - r1) + r1) * (snapshot[a] - snapshot[b])
        moved = clamp(moved, bounds)
        population.replace(i, moved, evaluate(problem, moved))
    population.update_elite()
    logger.debug("t={}: {} of {} agents escaped with a uniform jump".format(t, jumps, n))
    return population

import numpy as np

from core.errors import InvalidArgumentError
from core.problem import clamp, evaluate_many
from core.records import RunConfig, RunRecord, ConvergenceTrace
from core.rng import RngStream
from goa.params import GoaParams
from goa.rules import initialize, exploit_step, explore_levy_step, explore_brownian_step, escape_step
from helpers.logger import setup_logger

logger = setup_logger(__name__, "warning")

EXPLOIT = "exploit"
EXPLORE = "explore"


def split(n):
    """Size of the first half of a population of ``n`` agents."""
    return n // 2


def apply_moves(population, problem, candidates):
    """Clamps and evaluates one candidate per agent, then keeps the improving ones."""
    candidates = clamp(candidates, problem.bounds)
    population.accept(np.arange(population.size), candidates, evaluate_many(problem, candidates))
    return population


def goa_sweep(population, problem, rng, params, t, T):
    """
    One update sweep of plain GOA. A coin (``uniform() < exploit_probability``)
    picks exploitation for all agents, or exploration: Levy flight for the
    first half and Brownian flight for the second half. All agents see the
    elite from the start of the sweep. Returns the branch taken.
    """
    elite = population.elite.position.copy()
    positions = population.positions
    if rng.uniform() < params.exploit_probability:
        branch = EXPLOIT
        candidates = exploit_step(positions, elite, rng, params, t, T)
    else:
        branch = EXPLORE
        half = split(population.size)
        candidates = np.vstack([explore_levy_step(positions[:half], elite, rng, params, t, T),
                                explore_brownian_step(positions[half:], elite, rng, params, t, T)])
    apply_moves(population, problem, candidates)
    return branch


def run_loop(problem, config, params, sweep, restart=None, callback=None, algorithm="goa"):
    """
    The iteration loop shared by GOA and its strategy variants: initialize,
    then for t in 1..T run ``sweep``, the escape rule and, if given, ``restart``,
    recording the elite fitness after each iteration.

    ``sweep(population, problem, rng, params, t, T)`` and
    ``restart(population, problem, rng, t, T)`` work in place;
    ``restart`` returns the number of evaluations it spent.
    ``callback(t, population)`` is called at the end of every iteration.
    """
    if not isinstance(config, RunConfig):
        raise InvalidArgumentError("run_loop expects a RunConfig, got {}".format(type(config)))
    T = config.max_iterations
    rng = RngStream(config.seed)
    population = initialize(rng, problem, config.population_size)
    evaluations = population.size
    trace = ConvergenceTrace(T)
    logger.debug("{} on {}: seed {}, initial best {!r}".format(algorithm, problem.name, config.seed, population.elite.fitness))
    for t in range(1, T + 1):
        phase = sweep(population, problem, rng, params, t, T)
        evaluations += population.size
        escape_step(population, rng, params, t, T, problem)
        evaluations += population.size
        if restart is not None:
            evaluations += restart(population, problem, rng, t, T)
        trace.record(population.elite.fitness)
        logger.debug("t={} ({}): elite {!r}".format(t, phase, population.elite.fitness))
        if callback is not None:
            callback(t, population)
    elite = population.elite
    logger.debug("{} on {}: best {!r} after {} evaluations".format(algorithm, problem.name, elite.fitness, evaluations))
    record = RunRecord(algorithm=algorithm, problem=problem.name, dimension=problem.dimension, seed=config.seed,
                       best_fitness=elite.fitness, best_position=elite.position.copy(), evaluations=evaluations)
    return record, trace


def run_goa(problem, config, callback=None, params=None):
    # type: (Problem, RunConfig, callable, GoaParams) -> (RunRecord, ConvergenceTrace)
    """Runs plain GOA with ``params`` (default ``GoaParams()``) under ``config``."""
    if params is None:
        params = GoaParams()
    return run_loop(problem, config, params, goa_sweep, callback=callback, algorithm="goa")

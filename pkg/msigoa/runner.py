import numpy as np

from core.errors import InvalidArgumentError
from goa.runner import goa_sweep, run_loop
from msigoa.archive import DominantArchive, archive_update
from msigoa.dprm import dprm_restart
from msigoa.ibuf import ibuf_update
from msigoa.strategy import StrategyConfig
from helpers.logger import setup_logger

logger = setup_logger(__name__, "warning")


class VariantIteration(object):
    """
    Per-run state of a strategy variant: the dominant archive and the fitness
    of every agent at the start of the current iteration. Provides the sweep
    and restart callables for ``goa.run_loop``.
    """

    def __init__(self, strategy, dimension):
        self.strategy = strategy
        self.archive = DominantArchive(strategy.archive_capacity(dimension)) if strategy.use_dprm else None
        self.start_fitness = None

    def sweep(self, population, problem, rng, params, t, T):
        self.start_fitness = population.fitness.copy()
        if self.strategy.use_ibuf:
            return ibuf_update(population, problem, rng, params, t, T)
        return goa_sweep(population, problem, rng, params, t, T)

    def restart(self, population, problem, rng, t, T):
        archive_update(self.archive, population)
        mask = None
        if self.strategy.dprm_scope == "non_improved":
            mask = ~(population.fitness < self.start_fitness)
        dprm_restart(population, self.archive, rng, problem, restart_mask=mask)
        return population.size if mask is None else int(np.sum(mask))


def run_variant(problem, config, callback=None, algorithm=None):
    # type: (Problem, RunConfig, callable, str) -> (RunRecord, ConvergenceTrace)
    """
    Runs the GOA variant described by ``config.strategy`` (a ``StrategyConfig``,
    ``None`` meaning all strategies off). Each iteration: the update sweep
    (IBUF schedule or the GOA coin), the escape rule, then with DPRM the
    archive update and the restart. With APTS the motion vectors of the update
    rules are scaled. All strategies off reproduces ``run_goa`` exactly.
    """
    strategy = config.strategy if config.strategy is not None else StrategyConfig()
    if not isinstance(strategy, StrategyConfig):
        raise InvalidArgumentError("run_variant expects a StrategyConfig, got {}".format(type(strategy)))
    iteration = VariantIteration(strategy, problem.dimension)
    restart = iteration.restart if strategy.use_dprm else None
    logger.debug("Running {!r} on {}".format(strategy, problem.name))
    return run_loop(problem, config, strategy.goa_params(), iteration.sweep, restart=restart,
                    callback=callback, algorithm=algorithm or strategy.name)

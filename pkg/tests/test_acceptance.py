"""
Full-scale campaigns on the engineering problems and the classic suite.
They take minutes, set BENCH_SLOW=1 to run them.
"""
import logging
import os
import unittest

import numpy as np

from bench.campaign import derive_seed
from core import RunConfig
from msigoa import StrategyConfig, VARIANTS, run_variant
from problems import get_problem, classic_suite
from stats import friedman

logger = logging.getLogger(__name__)

slow = unittest.skipUnless(os.environ.get("BENCH_SLOW"), "set BENCH_SLOW=1 to run full-scale campaigns")


def final_bests(name, problem, runs, population=30, iterations=500, base_seed=0):
    strategy = StrategyConfig.from_name(name)
    bests = []
    for run in range(runs):
        seed = derive_seed(base_seed, name, problem.name, problem.dimension, run)
        config = RunConfig(population_size=population, max_iterations=iterations, seed=seed, strategy=strategy)
        bests.append(run_variant(problem, config, algorithm=name)[0].best_fitness)
    return np.array(bests)


class TestQuickRegression(unittest.TestCase):

    def test_msigoa_on_sphere(self):
        problem = get_problem("sphere", 5)
        bests = final_bests("msigoa", problem, runs=3, population=20, iterations=100)
        self.assertTrue(np.all(bests < 1.0), bests)

    def test_msigoa_feasible_on_spring(self):
        problem = get_problem("spring")
        strategy = StrategyConfig.from_name("msigoa")
        record, _ = run_variant(problem, RunConfig(population_size=20, max_iterations=100, seed=1, strategy=strategy))
        self.assertTrue(problem.is_feasible(record.best_position))
        self.assertLess(record.best_fitness, 0.03)


@slow
class TestEngineeringOptima(unittest.TestCase):

    def check(self, name, limit):
        problem = get_problem(name)
        bests = final_bests("msigoa", problem, runs=30)
        logger.info("{}: best {!r}, median {!r}".format(name, bests.min(), np.median(bests)))
        self.assertLessEqual(bests.min(), limit)

    def test_spring(self):
        self.check("spring", 0.012700)

    def test_pressure_vessel(self):
        self.check("pressure-vessel", 5915.0)

    def test_welded_beam(self):
        self.check("welded-beam", 1.7100)


@slow
class TestClassicSuite(unittest.TestCase):

    runs = 20

    @classmethod
    def setUpClass(cls):
        cls.medians = {}
        cls.means = {}
        for problem in classic_suite(10):
            for name in VARIANTS:
                bests = final_bests(name, problem, runs=cls.runs)
                cls.medians[(name, problem.name)] = np.median(bests)
                cls.means[(name, problem.name)] = np.mean(bests)
        cls.problems = [problem.name for problem in classic_suite(10)]

    def test_msigoa_not_worse_than_goa(self):
        not_worse = [p for p in self.problems if self.medians[("msigoa", p)] <= self.medians[("goa", p)]]
        self.assertGreaterEqual(len(not_worse), 6, not_worse)

    def test_ablation_ranks(self):
        names = list(VARIANTS)
        table = np.array([[self.means[(name, p)] for name in names] for p in self.problems])
        result = friedman(table)
        ranks = dict(zip(names, result.avg_ranks))
        logger.info("Average ranks: {}".format(", ".join("{} {:.3f}".format(n, r) for n, r in sorted(ranks.items(), key=lambda i: i[1]))))
        for name in ["goa-1", "goa-2", "goa-3"]:
            if ranks[name] >= ranks["goa"]:
                logger.warning("{} does not beat goa: rank {:.3f} vs {:.3f}".format(name, ranks[name], ranks["goa"]))
        self.assertEqual(min(ranks, key=ranks.get), "msigoa")


if __name__ == '__main__':
    unittest.main()

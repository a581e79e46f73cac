"""tests for the GOA sweep and run loop"""
import unittest

import numpy as np
from mock import Mock

from core import Bounds, Problem, Population, RngStream, RunConfig, evaluate
from goa import GoaParams, goa_sweep, initialize, run_goa
from goa.runner import EXPLOIT, EXPLORE


def sphere(x):
    return float(np.sum(x ** 2))


def get_problem(dimension=2):
    return Problem("sphere", Bounds.uniform(-10, 10, dimension), sphere)


class TestSweep(unittest.TestCase):

    def test_exploit_branch_matches_block_step(self):
        problem = get_problem(3)
        population = initialize(RngStream(1), problem, 5)
        start = population.copy()
        rng = RngStream(9)
        branch = goa_sweep(population, problem, rng, GoaParams(exploit_probability=1.0), 2, 10)
        self.assertEqual(branch, EXPLOIT)
        twin = RngStream(9)
        twin.uniform()
        rand, rb = twin.uniform((5, 3)), twin.normal((5, 3))
        elite = start.elite.position
        candidates = np.clip(start.positions + 0.88 * rand * rb * (elite - rb * start.positions), -10, 10)
        for i in range(5):
            value = sphere(candidates[i])
            if value < start.fitness[i]:
                self.assertTrue(np.allclose(population.positions[i], candidates[i], rtol=0, atol=1e-12))
            else:
                self.assertEqual(population.positions[i].tolist(), start.positions[i].tolist())

    def test_explore_branch(self):
        problem = get_problem()
        population = initialize(RngStream(1), problem, 5)
        branch = goa_sweep(population, problem, RngStream(3), GoaParams(exploit_probability=0.0), 2, 10)
        self.assertEqual(branch, EXPLORE)

    def test_greedy_never_worsens(self):
        problem = get_problem(4)
        population = initialize(RngStream(6), problem, 8)
        rng = RngStream(6)
        for t in range(1, 11):
            before = population.fitness.copy()
            goa_sweep(population, problem, rng, GoaParams(), t, 10)
            self.assertTrue(np.all(population.fitness <= before))


class TestRunGoa(unittest.TestCase):

    def test_degenerate_box(self):
        lower = np.array([0.5, -0.5])
        problem = Problem("point", Bounds(lower, lower), sphere)
        record, trace = run_goa(problem, RunConfig(population_size=2, max_iterations=1, seed=4))
        self.assertEqual(record.best_fitness, evaluate(problem, lower))
        self.assertEqual(trace.values().tolist(), [evaluate(problem, lower)])

    def test_trace_monotone(self):
        record, trace = run_goa(get_problem(), RunConfig(population_size=10, max_iterations=50, seed=17))
        values = trace.values()
        self.assertEqual(len(values), 50)
        self.assertTrue(np.all(np.diff(values) <= 0))
        self.assertEqual(record.best_fitness, values[-1])
        self.assertEqual(record.best_fitness, sphere(record.best_position))

    def test_deterministic(self):
        config = RunConfig(population_size=8, max_iterations=20, seed=123)
        a, trace_a = run_goa(get_problem(3), config)
        b, trace_b = run_goa(get_problem(3), config)
        self.assertEqual(a.best_fitness, b.best_fitness)
        self.assertEqual(a.best_position.tolist(), b.best_position.tolist())
        self.assertEqual(trace_a.values().tolist(), trace_b.values().tolist())

    def test_positions_stay_in_bounds(self):
        problem = Problem("shifted", Bounds([-1.0, 0.0], [1.0, 0.5]), lambda x: float(np.sum((x - 3.0) ** 2)))
        seen = []

        def check(t, population):
            seen.append(t)
            self.assertTrue(all(problem.bounds.contains(x) for x in population.positions))
        run_goa(problem, RunConfig(population_size=6, max_iterations=15, seed=2), callback=check)
        self.assertEqual(seen, list(range(1, 16)))

    def test_evaluation_count(self):
        record, _ = run_goa(get_problem(), RunConfig(population_size=6, max_iterations=7, seed=0))
        self.assertEqual(record.evaluations, 6 + 7 * 2 * 6)

    def test_improves_sphere(self):
        problem = get_problem(5)
        config = RunConfig(population_size=20, max_iterations=100, seed=8)
        initial = initialize(RngStream(8), problem, 20).elite.fitness
        record, _ = run_goa(problem, config)
        self.assertLess(record.best_fitness, initial)

    def test_callback_receives_population(self):
        callback = Mock()
        run_goa(get_problem(), RunConfig(population_size=4, max_iterations=3, seed=1), callback=callback)
        self.assertEqual(callback.call_count, 3)
        self.assertIsInstance(callback.call_args[0][1], Population)


if __name__ == '__main__':
    unittest.main()

"""tests for the dominant archive and the restart mechanism"""
import unittest

import numpy as np

from core import Bounds, Problem, Population, RngStream, InvalidArgumentError, InvalidStateError, evaluate
from goa import initialize
from msigoa import DominantArchive, archive_update, dprm_weights, dprm_center_and_sample, dprm_restart


def sphere(x):
    return float(np.sum(x ** 2))


def get_problem(dimension=2, bound=10.0):
    return Problem("sphere", Bounds.uniform(-bound, bound, dimension), sphere)


def get_archive(positions, fitness, capacity=10):
    archive = DominantArchive(capacity)
    for x, f in zip(positions, fitness):
        archive.append(np.array(x, dtype=float), f)
    return archive


class TestArchive(unittest.TestCase):

    def test_appends_best_half(self):
        problem = get_problem()
        population = initialize(RngStream(1), problem, 30)
        archive = archive_update(DominantArchive(100), population)
        self.assertEqual(len(archive), 15)
        best = np.sort(population.fitness)[:15]
        self.assertEqual([m.fitness for m in archive.members], best.tolist())

    def test_odd_population_rounds_up(self):
        population = initialize(RngStream(1), get_problem(), 5)
        self.assertEqual(len(archive_update(DominantArchive(100), population)), 3)

    def test_fifo_eviction(self):
        archive = get_archive([[i, 0] for i in range(15)], range(15), capacity=10)
        self.assertEqual(len(archive), 10)
        self.assertEqual([m.position[0] for m in archive.members], list(range(5, 15)))

    def test_snapshots(self):
        problem = get_problem()
        population = initialize(RngStream(2), problem, 4)
        archive = archive_update(DominantArchive(10), population)
        saved = [m.position.tolist() for m in archive.members]
        population.positions[:] = 0.0
        self.assertEqual([m.position.tolist() for m in archive.members], saved)

    def test_ranked_is_stable(self):
        archive = get_archive([[0, 0], [1, 0], [2, 0]], [2.0, 1.0, 2.0])
        positions, fitness = archive.ranked()
        self.assertEqual(positions[:, 0].tolist(), [1.0, 0.0, 2.0])
        self.assertEqual(fitness.tolist(), [1.0, 2.0, 2.0])

    def test_capacity(self):
        with self.assertRaises(InvalidArgumentError):
            DominantArchive(0)


class TestWeights(unittest.TestCase):

    def test_single(self):
        self.assertEqual(dprm_weights(1).tolist(), [1.0])

    def test_three(self):
        self.assertTrue(np.allclose(dprm_weights(3), [0.6370425712, 0.2845702574, 0.0783871713], rtol=0, atol=1e-9))

    def test_normalized_and_decreasing(self):
        for n in range(1, 1001):
            weights = dprm_weights(n)
            self.assertAlmostEqual(weights.sum(), 1.0, delta=1e-12)
            self.assertTrue(np.all(weights > 0))
            self.assertTrue(np.all(np.diff(weights) < 0))

    def test_invalid(self):
        with self.assertRaises(InvalidArgumentError):
            dprm_weights(0)


class TestCenterAndSample(unittest.TestCase):

    def test_empty(self):
        with self.assertRaises(InvalidStateError):
            dprm_center_and_sample(DominantArchive(3), RngStream(0))

    def test_identical_members(self):
        archive = get_archive([[1.5, -2.0]] * 4, [1.0, 2.0, 3.0, 4.0])
        center, noise = dprm_center_and_sample(archive, RngStream(3))
        self.assertTrue(np.allclose(center, [1.5, -2.0], rtol=0, atol=1e-12))
        self.assertTrue(np.allclose(noise, 0.0, rtol=0, atol=1e-12))

    def test_spread_on_one_axis(self):
        archive = get_archive([[0.0, 0.0], [2.0, 0.0]], [1.0, 2.0])
        weights = dprm_weights(2)
        center, noise = dprm_center_and_sample(archive, RngStream(3), count=100)
        self.assertTrue(np.allclose(center, [2.0 * weights[1], 0.0], rtol=0, atol=1e-15))
        self.assertTrue(np.all(noise[:, 1] == 0.0))
        self.assertGreater(np.abs(noise[:, 0]).max(), 0.0)

    def test_sample_matches_formula(self):
        archive = get_archive([[0.0, 0.0], [1.0, 2.0]], [2.0, 1.0])
        center, noise = dprm_center_and_sample(archive, RngStream(8))
        members = np.array([[1.0, 2.0], [0.0, 0.0]])
        expected_center = dprm_weights(2) @ members
        eta = RngStream(8).normal(2)
        self.assertTrue(np.allclose(center, expected_center, rtol=0, atol=1e-15))
        self.assertTrue(np.allclose(noise, eta @ (members - expected_center) / np.sqrt(2), rtol=0, atol=1e-12))

    def test_covariance(self):
        archive = get_archive([[0.0, 0.0], [1.0, 2.0], [3.0, 5.0]], [1.0, 2.0, 3.0])
        center, noise = dprm_center_and_sample(archive, RngStream(2024), count=100000)
        members, _ = archive.ranked()
        # the covariance matrix built directly, one outer product per member
        expected = np.zeros((2, 2))
        for x in members:
            expected += np.outer(x - center, x - center) / 3.0
        self.assertTrue(np.allclose(expected, expected.T))
        self.assertTrue(np.all(np.linalg.eigvalsh(expected) >= -1e-12))
        empirical = noise.T @ noise / noise.shape[0]
        self.assertTrue(np.all(np.abs(empirical - expected) <= 0.03 * np.abs(expected)))


class TestRestart(unittest.TestCase):

    def test_fixed_point(self):
        problem = get_problem()
        positions = np.array([[1.0, 1.0], [1.0, 1.0]])
        population = Population(positions, [sphere(x) for x in positions])
        archive = get_archive([[1.0, 1.0]] * 3, [2.0, 2.0, 2.0])
        dprm_restart(population, archive, RngStream(0), problem)
        self.assertTrue(np.allclose(population.positions, positions, rtol=0, atol=1e-12))

    def test_greedy(self):
        problem = get_problem()
        positions = np.array([[0.0, 0.0], [6.0, 6.0]])
        population = Population(positions, [sphere(x) for x in positions])
        archive = get_archive([[0.0, 0.0]] * 2, [0.0, 0.0])
        dprm_restart(population, archive, RngStream(0), problem)
        # zero spread: candidates are (X + 0 + 0) / 3
        self.assertEqual(population.positions[0].tolist(), [0.0, 0.0])
        self.assertTrue(np.allclose(population.positions[1], [2.0, 2.0], rtol=0, atol=1e-15))

    def test_empty_archive_is_skipped(self):
        problem = get_problem()
        population = initialize(RngStream(1), problem, 4)
        start = population.positions.copy()
        dprm_restart(population, DominantArchive(5), RngStream(0), problem)
        self.assertEqual(population.positions.tolist(), start.tolist())

    def test_matches_equation(self):
        problem = get_problem(2, 5.0)
        population = initialize(RngStream(6), problem, 4)
        start = population.copy()
        archive = get_archive([[1.0, -1.0], [0.5, 2.0]], [0.3, 0.1])
        dprm_restart(population, archive, RngStream(13), problem)

        members = np.array([[0.5, 2.0], [1.0, -1.0]])
        center = dprm_weights(2) @ members
        eta = RngStream(13).normal((4, 2))
        noise = eta @ (members - center) / np.sqrt(2)
        candidates = np.clip((start.positions + center + start.elite.position) / 3.0 + noise, -5, 5)
        for i in range(4):
            if sphere(candidates[i]) < start.fitness[i]:
                self.assertTrue(np.allclose(population.positions[i], candidates[i], rtol=0, atol=1e-12))
            else:
                self.assertEqual(population.positions[i].tolist(), start.positions[i].tolist())

    def test_mask_limits_moves(self):
        problem = get_problem()
        positions = np.array([[6.0, 6.0], [6.0, 6.0]])
        population = Population(positions, [sphere(x) for x in positions])
        archive = get_archive([[0.0, 0.0]], [0.0])
        dprm_restart(population, archive, RngStream(0), problem, restart_mask=[False, True])
        self.assertEqual(population.positions[0].tolist(), [6.0, 6.0])
        self.assertTrue(np.allclose(population.positions[1], [4.0, 4.0], rtol=0, atol=1e-15))


if __name__ == '__main__':
    unittest.main()

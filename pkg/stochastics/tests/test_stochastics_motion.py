"""tests for Brownian and Levy motion generators"""
import unittest

import numpy as np
from mock import Mock

from core import RngStream, InvalidArgumentError
from stochastics import brownian_vector, mantegna_sigma, LevyParams, levy_vector

# mpmath, 30 digits: (gamma(2.5)*sin(0.75*pi)/(gamma(1.25)*1.5*2**0.25))**(1/1.5)
MANTEGNA_SIGMA_15 = 0.696574502557697


class TestBrownian(unittest.TestCase):

    def test_reproducible(self):
        self.assertEqual(brownian_vector(RngStream(11), 4).tolist(), brownian_vector(RngStream(11), 4).tolist())

    def test_block_shape(self):
        self.assertEqual(brownian_vector(RngStream(0), 3, count=5).shape, (5, 3))

    def test_moments(self):
        sample = brownian_vector(RngStream(2024), 100000)
        self.assertLess(abs(sample.mean()), 0.02)
        self.assertLess(abs(sample.var(ddof=1) - 1.0), 0.03)

    def test_invalid_dimension(self):
        with self.assertRaises(InvalidArgumentError):
            brownian_vector(RngStream(0), 0)


class TestMantegna(unittest.TestCase):

    def test_default_alpha(self):
        self.assertAlmostEqual(mantegna_sigma(1.5), MANTEGNA_SIGMA_15, delta=1e-10)

    def test_alpha_one(self):
        self.assertAlmostEqual(mantegna_sigma(1.0), 1.0, places=14)

    def test_alpha_two_is_degenerate(self):
        self.assertEqual(mantegna_sigma(2.0), 0.0)
        with self.assertRaises(InvalidArgumentError):
            LevyParams(alpha=2.0)

    def test_out_of_range(self):
        for alpha in (0.0, -1.0, 2.5):
            with self.assertRaises(InvalidArgumentError):
                mantegna_sigma(alpha)

    def test_params(self):
        params = LevyParams()
        self.assertEqual((params.alpha, params.scale), (1.5, 0.05))
        self.assertAlmostEqual(params.sigma_z, MANTEGNA_SIGMA_15, delta=1e-10)
        with self.assertRaises(InvalidArgumentError):
            LevyParams(scale=0)


class TestLevy(unittest.TestCase):

    def test_reproducible(self):
        self.assertEqual(levy_vector(RngStream(5), 3).tolist(), levy_vector(RngStream(5), 3).tolist())

    def test_formula(self):
        params = LevyParams()
        rng = Mock()
        rng.normal.side_effect = [np.array([1.0, -2.0]), np.array([4.0, -0.25])]
        steps = levy_vector(rng, 2, params)
        expected = 0.05 * np.array([1.0, -2.0]) * params.sigma_z / np.array([4.0, 0.25]) ** (1 / 1.5)
        self.assertTrue(np.allclose(steps, expected, rtol=1e-14, atol=0))

    def test_zero_denominator_is_redrawn(self):
        rng = Mock()
        rng.normal.side_effect = [np.array([1.0, 1.0, 1.0]), np.array([1.0, 0.0, 0.0]),
                                  np.array([0.0, 1.0]), np.array([1.0])]
        steps = levy_vector(rng, 3)
        self.assertTrue(np.all(np.isfinite(steps)))
        self.assertEqual(rng.normal.call_count, 4)

    def test_heavier_tail_than_gaussian(self):
        params = LevyParams()
        levy = levy_vector(RngStream(99), 100000, params)
        gaussian = params.scale * RngStream(99).normal(100000)
        threshold = 10 * params.scale
        self.assertGreater(np.sum(np.abs(levy) > threshold), np.sum(np.abs(gaussian) > threshold))

    def test_median_is_positive(self):
        median = np.median(np.abs(levy_vector(RngStream(1), 100000)))
        self.assertTrue(np.isfinite(median))
        self.assertGreater(median, 0)


if __name__ == '__main__':
    unittest.main()

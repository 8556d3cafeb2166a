import unittest

import numpy

from deltashell.api.errors import DomainError, MeshTooCoarse
from deltashell.api.shell_config import ShellConfig
from deltashell.spectral.negcount import count_bound_states
from deltashell.spectral.oracle import (
    fd_converged_count,
    fd_count,
    oscillation_count,
    oscillation_report,
    zero_energy_solution,
)

from test_utils import random_config, timeout


class OscillationTestCase(unittest.TestCase):
    def test_single_shell(self):
        solution = zero_energy_solution(ShellConfig([1], [-3]), 0)
        numpy.testing.assert_allclose([[1.0, 0.0], [-2.0, 3.0]], solution.coefficients)
        self.assertAlmostEqual(0.0, solution.value(1.5), places=15)
        self.assertEqual(1, oscillation_count(ShellConfig([1], [-3]), 0))
        self.assertEqual(0, oscillation_count(ShellConfig([1], [3]), 0))
        self.assertEqual(0, oscillation_count(ShellConfig(), 0))

    def test_threshold(self):
        report = oscillation_report(ShellConfig([1], [-1]), 0)
        self.assertEqual(0, report.count)
        self.assertTrue(report.threshold)
        self.assertEqual((0, 1), report.candidates)

    def test_critical_channel(self):
        solution = zero_energy_solution(ShellConfig([1], [-1]), -0.5)
        numpy.testing.assert_allclose([1.0, -1.0], solution.coefficients[1])
        self.assertEqual(1, oscillation_count(ShellConfig([1], [-1]), -0.5))
        self.assertEqual(1, oscillation_count(ShellConfig([1], [-1e-3]), -0.5))
        self.assertEqual(0, oscillation_count(ShellConfig([1], [1]), -0.5))

    def test_jump_conditions(self):
        random = numpy.random.RandomState(31)
        for _ in range(50):
            config = random_config(random, max_radius=5.0, max_strength=3.0)
            l = float(random.choice([0.0, 1.0, 2.5]))
            solution = zero_energy_solution(config, l)
            for index, (r, alpha) in enumerate(config):
                left = solution.value(r, index)
                right = solution.value(r, index + 1)
                scale = 1.0 + abs(left) + abs(right) + r * abs(solution.derivative(r, index))
                self.assertLessEqual(abs(left - right), 1e-9 * scale)
                jump = solution.derivative(r, index + 1) - solution.derivative(r, index)
                slopes = abs(solution.derivative(r, index)) + abs(alpha * left)
                self.assertLessEqual(abs(jump - alpha * left), 1e-9 * (scale / r + slopes))

    def test_agrees_with_kappa(self):
        random = numpy.random.RandomState(32)
        for _ in range(200):
            config = random_config(random)
            l = float(random.choice([0.0, 0.5, 1.0, 3.5]))
            self.assertEqual(count_bound_states(config, l), oscillation_count(config, l))

    def test_domain(self):
        with self.assertRaises(DomainError):
            zero_energy_solution(ShellConfig([1], [-1]), -1)


class FiniteDifferenceTestCase(unittest.TestCase):
    def test_single_shell(self):
        with timeout(self, 10):
            self.assertEqual(1, fd_count(ShellConfig([1], [-3]), 0, 50.0, 1e-3))
            self.assertEqual(0, fd_count(ShellConfig([1], [3]), 0, 50.0, 1e-3))
            self.assertEqual(0, fd_count(ShellConfig([1], [-0.5]), 0, 50.0, 1e-3))

    def test_converged(self):
        with timeout(self, 30):
            self.assertEqual(1, fd_converged_count(ShellConfig([1], [-3]), 0))
            self.assertEqual(2, fd_converged_count(ShellConfig([1, 2], [-5, -5]), 0))
            self.assertEqual(0, fd_converged_count(ShellConfig(), 1))

    def test_errors(self):
        with self.assertRaises(MeshTooCoarse):
            fd_count(ShellConfig([1.0, 1.0004], [-1, -1]), 0, 10.0, 1e-3)
        with self.assertRaises(DomainError):
            fd_count(ShellConfig([1, 5], [-1, -1]), 0, 4.0, 1e-3)


if __name__ == "__main__":
    unittest.main()

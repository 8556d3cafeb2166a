import math
import unittest

import numpy

from deltashell.api.errors import InsufficientShells, PrerequisiteNotMet
from deltashell.api.shell_config import ShellConfig
from deltashell.api.tail_model import FiniteTail, HarmonicTail, PeriodicTail, SampledTail
from deltashell.spectral.jacobi import (
    INSUFFICIENCY_NOTE,
    build_jacobi,
    check_continuous_spectrum,
    check_discrete,
    check_self_adjoint,
    check_semibounded,
    spacing_vanishes,
    truncation_inertia,
    windowed_sums,
)

EMPTY = ShellConfig()


class JacobiMatrixTestCase(unittest.TestCase):
    def test_finite(self):
        config = ShellConfig([1, 2, 3, 4], [-1, 1, -1, 1])
        jacobi = build_jacobi(config, None, 3)
        numpy.testing.assert_allclose([0.5, 1.5, 0.5], jacobi.diagonal)
        numpy.testing.assert_allclose([-0.5, -0.5], jacobi.off_diagonal)
        self.assertEqual(3, jacobi.size)
        dense = jacobi.to_dense()
        self.assertEqual(-0.5, dense[1, 0])
        self.assertEqual(0.0, dense[2, 0])
        with self.assertRaises(InsufficientShells):
            build_jacobi(config, FiniteTail(), 4)

    def test_critical_harmonic(self):
        # alpha_k = -(2k+1) cancels 1/d_k + 1/d_(k+1) exactly
        jacobi = build_jacobi(EMPTY, HarmonicTail(1.0), 10)
        numpy.testing.assert_allclose(numpy.zeros(10), jacobi.diagonal, atol=1e-12)
        self.assertAlmostEqual(-2 / math.sqrt(1.25), jacobi.off_diagonal[0], places=12)

    def test_periodic(self):
        config = ShellConfig([0.5], [-1])
        jacobi = build_jacobi(config, PeriodicTail([0.5, 1.0], [-1.0, 2.0]), 50)
        self.assertEqual(50, jacobi.size)
        self.assertEqual(49, jacobi.off_diagonal.size)
        report = truncation_inertia(config, PeriodicTail([0.5, 1.0], [-1.0, 2.0]), 50)
        self.assertEqual(50, report.size)

    def test_windowed_sums(self):
        sums = windowed_sums(
            numpy.array([0.5, 1.0, 1.6, 3.0]), numpy.array([1.0, 2.0, 3.0, 4.0]), 1.0
        )
        self.assertEqual([3.0, 5.0, 3.0, 4.0], sums.tolist())


class HarmonicTableTestCase(unittest.TestCase):
    def assert_case(self, criterion_id, status, tail):
        verdict = check_self_adjoint(EMPTY, tail)
        self.assertEqual(criterion_id, verdict.criterion_id, msg=str(verdict))
        self.assertEqual(status, verdict.status.value)
        return verdict

    def test_cases(self):
        self.assert_case("self_adjoint.harmonic_i", "Holds", HarmonicTail(0, 1, 2))
        self.assert_case("self_adjoint.harmonic_i", "Holds", HarmonicTail(1, -1, 3))
        self.assert_case("self_adjoint.harmonic_ii", "Holds", HarmonicTail(3, 0, 0))
        self.assert_case("self_adjoint.harmonic_ii", "Holds", HarmonicTail(2, 0, 0))
        self.assert_case("self_adjoint.harmonic_iii", "Holds", HarmonicTail(0, -1, -2))
        self.assert_case("self_adjoint.harmonic_iii", "Holds", HarmonicTail(0, 1, 1))
        critical = self.assert_case("self_adjoint.harmonic_iv", "Fails", HarmonicTail(1, 0, 0))
        self.assertEqual("infinite", critical.value)
        self.assert_case("self_adjoint.harmonic_iv", "Fails", HarmonicTail(1, 1, -0.5))
        middle = self.assert_case("self_adjoint.harmonic_v", "Fails", HarmonicTail(1.5, 0, 0))
        self.assertEqual("infinite", middle.value)
        self.assert_case("self_adjoint.harmonic_v", "Fails", HarmonicTail(0.5, 2, -1))
        self.assert_case("self_adjoint.harmonic", "Inconclusive", HarmonicTail(1.5, 1, 0.5))

    def test_law_in_evidence(self):
        verdict = check_self_adjoint(EMPTY, HarmonicTail(1.5, 0, 0))
        self.assertIn("alpha_k = -1.5(2k+1)", verdict.evidence)


class CriteriaTestCase(unittest.TestCase):
    def test_finite(self):
        self.assertTrue(check_self_adjoint(ShellConfig([1], [-1]), None).holds)
        self.assertTrue(check_semibounded(ShellConfig([1], [-1]), None).holds)
        self.assertTrue(check_discrete(ShellConfig([1], [-1]), None).fails)
        self.assertTrue(check_continuous_spectrum(ShellConfig([1], [-1]), None).holds)
        self.assertFalse(spacing_vanishes(None))

    def test_periodic(self):
        config = ShellConfig([0.5], [-1])
        tail = PeriodicTail([0.5, 1.0], [-1.0, 2.0])
        self.assertEqual(
            "self_adjoint.divergent_spacing", check_self_adjoint(config, tail).criterion_id
        )
        semibounded = check_semibounded(config, tail)
        self.assertTrue(semibounded.holds)
        self.assertEqual(3.0, semibounded.value)
        self.assertTrue(check_discrete(config, tail).fails)
        continuous = check_continuous_spectrum(config, tail)
        self.assertTrue(continuous.inconclusive)
        self.assertIn(INSUFFICIENCY_NOTE, continuous.evidence)
        self.assertTrue(
            check_continuous_spectrum(config, PeriodicTail([1.0], [0.0])).holds
        )

    def test_harmonic(self):
        critical = HarmonicTail(1.0)
        semibounded = check_semibounded(EMPTY, critical)
        self.assertTrue(semibounded.fails)
        self.assertEqual("brinck.necessity", semibounded.criterion_id)
        with self.assertRaises(PrerequisiteNotMet):
            check_discrete(EMPTY, critical)
        self.assertTrue(check_continuous_spectrum(EMPTY, critical).inconclusive)

        growing = HarmonicTail(0, 1, 0)
        self.assertTrue(check_semibounded(EMPTY, growing).holds)
        self.assertTrue(check_discrete(EMPTY, growing).holds)
        self.assertTrue(check_continuous_spectrum(EMPTY, growing).inconclusive)
        self.assertTrue(spacing_vanishes(growing))

        decaying = HarmonicTail(0, 1, -2)
        self.assertTrue(check_semibounded(EMPTY, decaying).holds)
        self.assertTrue(check_discrete(EMPTY, decaying).fails)
        self.assertTrue(check_continuous_spectrum(EMPTY, decaying).holds)

    def test_sampled(self):
        spacings = [1.0 / k for k in range(1, 41)]
        strengths = [-(2 * k + 1) for k in range(1, 41)]
        plain = SampledTail.from_sequences(spacings, strengths)
        for check in (check_self_adjoint, check_semibounded, check_continuous_spectrum):
            self.assertTrue(check(EMPTY, plain).inconclusive)
        with self.assertRaises(PrerequisiteNotMet):
            check_discrete(EMPTY, plain)
        self.assertIsNone(spacing_vanishes(plain))

        asserted = SampledTail.from_sequences(
            spacings,
            strengths,
            d_squared_summable=True,
            log_convex=True,
            jacobi_series_converges=True,
            brinck_bounded=False,
            attractive=True,
        )
        self_adjoint = check_self_adjoint(EMPTY, asserted)
        self.assertTrue(self_adjoint.fails)
        self.assertEqual("infinite", self_adjoint.value)
        self.assertEqual("brinck.necessity", check_semibounded(EMPTY, asserted).criterion_id)

        divergent = SampledTail.from_sequences(
            [1.0] * 10,
            [1.0] * 10,
            d_squared_diverges=True,
            brinck_bounded=True,
            windowed_sums_diverge=False,
            windowed_abs_vanish=True,
        )
        self.assertTrue(check_self_adjoint(EMPTY, divergent).holds)
        self.assertTrue(check_semibounded(EMPTY, divergent).holds)
        self.assertTrue(check_discrete(EMPTY, divergent).fails)
        self.assertTrue(check_continuous_spectrum(EMPTY, divergent).holds)


if __name__ == "__main__":
    unittest.main()

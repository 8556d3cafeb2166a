import math
import unittest

import numpy

from deltashell.api.errors import DomainError
from deltashell.spectral.special import (
    KernelPoint,
    fundamental_pair,
    green_kernel,
    green_kernel_at,
    phi_l,
    psi_l,
)

from test_utils import timeout

L_VALUES = (-0.5, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.5, 4.0, 5.0)


class SpecialTestCase(unittest.TestCase):
    def test_zero_energy(self):
        self.assertEqual(2.0, phi_l(0, 0, 2))
        self.assertEqual(8.0, phi_l(2, 0, 2))
        self.assertEqual(1.0, psi_l(0, 0, 2))
        self.assertAlmostEqual(1 / 6, psi_l(1, 0, 2), places=15)
        self.assertAlmostEqual(math.sqrt(2) * math.log(2), psi_l(-0.5, 0, 2), places=15)

    def test_closed_form_l_zero(self):
        # phi = sinh(kappa r) / kappa, psi = exp(-kappa r)
        for lam in (-0.04, -1.0, -9.0):
            kappa = math.sqrt(-lam)
            for r in (0.1, 1.0, 4.0):
                self.assertAlmostEqual(
                    math.sinh(kappa * r) / kappa / phi_l(0, lam, r), 1.0, places=12
                )
                self.assertAlmostEqual(
                    math.exp(-kappa * r) / psi_l(0, lam, r), 1.0, places=12
                )
        self.assertAlmostEqual((1 - math.exp(-2)) / 2, green_kernel(0, -1, 1, 1), places=14)

    def test_wronskian(self):
        lams = -numpy.logspace(-4, 2, 20)
        radii = numpy.logspace(-2, 1, 50)
        with timeout(self, 30):
            for l in L_VALUES:
                for lam in lams:
                    for r in radii:
                        pair = fundamental_pair(l, float(lam), float(r))
                        self.assertLessEqual(
                            abs(pair.wronskian + 1.0),
                            1e-10,
                            msg=f"l={l}, lambda={lam}, r={r}",
                        )

    def test_wronskian_zero_energy(self):
        for l in L_VALUES[1:]:
            for r in (0.01, 0.5, 1.0, 7.0):
                self.assertAlmostEqual(-1.0, fundamental_pair(l, 0.0, r).wronskian, places=10)

    def test_small_lambda_limit(self):
        for l in (0.0, 1.0, 2.5):
            for r in (0.5, 2.0):
                self.assertAlmostEqual(
                    1.0, phi_l(l, -1e-12, r) / phi_l(l, 0.0, r), places=8
                )
                self.assertAlmostEqual(
                    1.0, psi_l(l, -1e-12, r) / psi_l(l, 0.0, r), places=5
                )

    def test_kernel(self):
        point = KernelPoint(1.5, -2.0, 0.3, 2.0)
        self.assertEqual(green_kernel(1.5, -2.0, 2.0, 0.3), green_kernel_at(point))
        self.assertAlmostEqual(0.5 ** 2 / 3, green_kernel(1, 0, 0.5, 1), places=15)
        # large kappa r neither overflows nor underflows on the diagonal
        value = green_kernel(0, -1e6, 50.0, 50.0)
        self.assertAlmostEqual(1.0, value * 2000.0, places=6)

    def test_kernel_monotone(self):
        lams = -numpy.logspace(-3, 3, 30)
        for l in (-0.5, 0.0, 1.0, 3.0):
            for r, s in ((1.0, 1.0), (0.5, 2.0)):
                values = [green_kernel(l, float(lam), r, s) for lam in lams]
                for nearer, further in zip(values, values[1:]):
                    self.assertLessEqual(further, nearer * (1 + 1e-12))

    def test_domain(self):
        with self.assertRaises(DomainError):
            phi_l(-1, -1, 1)
        with self.assertRaises(DomainError):
            psi_l(0, 1, 1)
        with self.assertRaises(DomainError):
            green_kernel(0, -1, 0, 1)


if __name__ == "__main__":
    unittest.main()

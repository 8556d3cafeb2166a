"""
Fundamental solutions of the free channel equation

    -u'' + l(l+1) u / r^2 = lambda u,    lambda <= 0,

and the Green kernel built from them.

With nu = l + 1/2, kappa = sqrt(-lambda) and x = kappa r the regular solution is

    phi = r^(l+1) g_nu(x),        g_nu(x) = 0F1(; nu + 1; x^2 / 4)

and the decaying solution is

    psi = r^(-l) t_nu(x),         t_mu(x) = (x / 2)^mu K_mu(x) / Gamma(mu + 1).

Both are normalized so that phi -> r^(l+1), psi -> r^(-l) / (2l + 1) as lambda -> 0 and
the Wronskian phi psi' - phi' psi is -1. Values are carried with the exponential factor
split off (phi = e^x phi_s, psi = e^-x psi_s) so that kernels at large kappa r do not
overflow.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Tuple

from scipy.special import gammaln, hyp0f1, ive, kve

from deltashell.api.errors import DomainError
from deltashell.api.channel import CRITICAL_L


class KernelPoint(NamedTuple):
    l: float
    lam: float
    r: float
    s: float


class FundamentalPair(NamedTuple):
    """Values and radial derivatives of phi and psi at one radius."""

    phi: float
    phi_prime: float
    psi: float
    psi_prime: float

    @property
    def wronskian(self) -> float:
        return self.phi * self.psi_prime - self.phi_prime * self.psi


def _check(l: float, lam: float, r: float):
    if not l >= CRITICAL_L:
        raise DomainError(f"Channel index l={l} is below -1/2")
    if not lam <= 0:
        raise DomainError(f"Spectral parameter {lam} is positive")
    if not r > 0:
        raise DomainError(f"Radius {r} is not positive")


def _log_g_scaled(nu: float, x: float) -> float:
    """log(e^-x g_nu(x))"""
    if x < nu + 1.0:
        return math.log(hyp0f1(nu + 1.0, x * x / 4.0)) - x
    return gammaln(nu + 1.0) + nu * math.log(2.0 / x) + math.log(ive(nu, x))


def _t_scaled(nu: float, x: float) -> Tuple[float, float]:
    """
    (e^x t_nu(x), e^x t_(nu+1)(x)) by upward recurrence from the fractional order.

    t_(mu+1) = (x^2 / 4) t_(mu-1) / (mu (mu + 1)) + t_mu mu / (mu + 1)
    has positive terms only, so the recurrence is stable.
    """

    def direct(mu: float) -> float:
        if mu == 0:
            return kve(0.0, x)
        return math.exp(mu * math.log(x / 2.0) + math.log(kve(mu, x)) - gammaln(mu + 1.0))

    mu = nu - math.floor(nu)
    previous, current = direct(mu), direct(mu + 1.0)
    quarter_x2 = x * x / 4.0
    while mu + 0.5 < nu:
        mu += 1.0
        previous, current = (
            current,
            quarter_x2 * previous / (mu * (mu + 1.0)) + current * mu / (mu + 1.0),
        )
    return previous, current


def _log_phi_scaled(l: float, kappa: float, r: float) -> float:
    """log(phi) - kappa r"""
    return (l + 1.0) * math.log(r) + _log_g_scaled(l + 0.5, kappa * r)


def _log_psi_scaled(l: float, kappa: float, r: float) -> float:
    """log(psi) + kappa r"""
    return -l * math.log(r) + math.log(_t_scaled(l + 0.5, kappa * r)[0])


def phi_l(l: float, lam: float, r: float) -> float:
    """
    The solution regular at the origin, phi_l(0, r) = r^(l+1).

    :param l: Channel index, at least -1/2
    :param lam: Spectral parameter, not positive
    :param r: Radius
    """
    _check(l, lam, r)
    if lam == 0:
        return r ** (l + 1.0)
    kappa = math.sqrt(-lam)
    return math.exp(_log_phi_scaled(l, kappa, r) + kappa * r)


def psi_l(l: float, lam: float, r: float) -> float:
    """
    The solution decaying at infinity, psi_l(0, r) = r^(-l) / (2l + 1) for l > -1/2 and
    sqrt(r) |log r| for l = -1/2.
    """
    _check(l, lam, r)
    if lam == 0:
        if l == CRITICAL_L:
            return math.sqrt(r) * abs(math.log(r))
        return r ** (-l) / (2.0 * l + 1.0)
    kappa = math.sqrt(-lam)
    return math.exp(_log_psi_scaled(l, kappa, r) - kappa * r)


def fundamental_pair(l: float, lam: float, r: float) -> FundamentalPair:
    """
    phi, phi', psi and psi' at radius r from the closed forms

        phi' = r^l [(l+1) g_nu + x^2 / (2(nu+1)) g_(nu+1)]
        psi' = r^(-l-1) [(l+1) t_nu - (2l+3) t_(nu+1)]
    """
    _check(l, lam, r)
    if lam == 0:
        phi = r ** (l + 1.0)
        phi_prime = (l + 1.0) * r ** l
        if l == CRITICAL_L:
            log_r = math.log(r)
            side = -1.0 if log_r < 0 else 1.0
            psi = side * math.sqrt(r) * log_r
            psi_prime = side * (log_r / 2.0 + 1.0) / math.sqrt(r)
        else:
            psi = r ** (-l) / (2.0 * l + 1.0)
            psi_prime = -l * r ** (-l - 1.0) / (2.0 * l + 1.0)
        return FundamentalPair(phi, phi_prime, psi, psi_prime)

    nu = l + 0.5
    kappa = math.sqrt(-lam)
    x = kappa * r
    g_nu = math.exp(_log_g_scaled(nu, x) + x)
    g_next = math.exp(_log_g_scaled(nu + 1.0, x) + x)
    t_nu, t_next = (value * math.exp(-x) for value in _t_scaled(nu, x))
    return FundamentalPair(
        phi=r ** (l + 1.0) * g_nu,
        phi_prime=r ** l * ((l + 1.0) * g_nu + x * x / (2.0 * (nu + 1.0)) * g_next),
        psi=r ** (-l) * t_nu,
        psi_prime=r ** (-l - 1.0) * ((l + 1.0) * t_nu - (2.0 * l + 3.0) * t_next),
    )


def green_kernel(l: float, lam: float, r: float, s: float) -> float:
    """
    K_l(r, s; lambda) = phi_l(lambda, min(r, s)) psi_l(lambda, max(r, s))

    :param l: Channel index, at least -1/2
    :param lam: Spectral parameter, not positive
    :param r: First radius
    :param s: Second radius
    :return: The kernel value, positive for every lambda <= 0
    """
    _check(l, lam, r)
    _check(l, lam, s)
    near, far = (r, s) if r <= s else (s, r)
    if lam == 0:
        return phi_l(l, 0.0, near) * psi_l(l, 0.0, far)
    kappa = math.sqrt(-lam)
    return math.exp(
        _log_phi_scaled(l, kappa, near)
        + _log_psi_scaled(l, kappa, far)
        - kappa * (far - near)
    )


def green_kernel_at(point: KernelPoint) -> float:
    return green_kernel(point.l, point.lam, point.r, point.s)

"""
Invariant distances, heat kernels and Green functions on the real sphere and
hyperboloid sections.

Time dependence is evaluated in imaginary time (T = -i tau) only. The zonal
kernels are functions of cos(psi), the bilinear pairing of the two embedded points.
"""

import cmath
import logging
import math

import numpy as np
from scipy.optimize import brentq

from sphere3c import jets
from sphere3c.errors import ConditioningError, DomainError, PoleError
from sphere3c.specfun import legendre_Q_half, theta3

LOGGER = logging.getLogger("verification.kernel")

TWO_PI_SQ = 2.0 * math.pi ** 2
TAIL_TOL = 1e-14
ENDPOINT_SIN = 1e-3
POLE_GAP = 1e-6
RESOLVENT_TAIL_TOL = 1e-13
RESOLVENT_MIN_TERMS = 400
SMALL_A = 1e-8


def _check_cos(cos_psi):
    if not -1.0 <= cos_psi <= 1.0:
        raise DomainError(f"cos(psi) must lie in [-1, 1], got {cos_psi}")


def _check_tau(tau):
    if tau <= 0:
        raise DomainError(f"tau must be positive, got {tau}")


def _check_psi(psi):
    if not 0.0 < psi < math.pi:
        raise DomainError(f"psi must lie in (0, pi), got {psi}")


# ---------------------------------------------------------------------------
# Distances


def cos_psi_spherical(angles1, angles2):
    """Three-angle formula for cos(psi) between two points of the spherical chart (chi, theta, phi)."""
    chi1, th1, ph1 = angles1
    chi2, th2, ph2 = angles2
    inner = math.cos(th1) * math.cos(th2) + math.sin(th1) * math.sin(th2) * math.cos(ph1 - ph2)
    value = math.cos(chi1) * math.cos(chi2) + math.sin(chi1) * math.sin(chi2) * inner
    return min(1.0, max(-1.0, value))


def hyperboloid_point(tau, theta, phi):
    """y = (cosh tau, sinh tau * n) on y0^2 - |y|^2 = 1."""
    s = math.sinh(tau)
    return np.array([math.cosh(tau), s * math.sin(theta) * math.cos(phi),
                     s * math.sin(theta) * math.sin(phi), s * math.cos(theta)])


def minkowski_pairing(y1, y2):
    return float(y1[0] * y2[0] - np.dot(y1[1:], y2[1:]))


def cosh_d_hyperboloid(coords1, coords2):
    """cosh d = cosh t' cosh t'' - sinh t' sinh t'' (n' . n'') for geodesic polar coordinates (tau, theta, phi)."""
    t1, th1, ph1 = coords1
    t2, th2, ph2 = coords2
    if t1 < 0 or t2 < 0:
        raise DomainError(f"radial coordinates must be nonnegative, got {t1}, {t2}")
    n_dot = math.cos(th1) * math.cos(th2) + math.sin(th1) * math.sin(th2) * math.cos(ph1 - ph2)
    return max(1.0, math.cosh(t1) * math.cosh(t2) - math.sinh(t1) * math.sinh(t2) * n_dot)


# ---------------------------------------------------------------------------
# Heat kernel on S^3


def gegenbauer_c1(J, cos_psi):
    """C_J^1(cos psi): sin((J+1) psi)/sin psi away from the poles, recurrence near them."""
    psi = math.acos(cos_psi)
    s = math.sin(psi)
    if s > ENDPOINT_SIN:
        return math.sin((J + 1) * psi) / s
    previous, current = 0.0, 1.0
    for _ in range(J):
        previous, current = current, 2.0 * cos_psi * current - previous
    return current


def level_energy(J):
    return J * (J + 2) / 2.0


def spectral_truncation(tau, tol=TAIL_TOL):
    """
    Smallest J_max whose geometric tail bound falls below ``tol``.

    Terms are bounded by (J+1)^2 exp(-tau E_J), and the ratio of consecutive
    bounds decreases with J, so once it is below 1 the tail is at most term * r / (1 - r).
    """
    _check_tau(tau)
    J = 0
    while True:
        n = J + 1
        term = n * n * math.exp(-tau * level_energy(J))
        ratio = ((n + 1) / n) ** 2 * math.exp(-tau * (2 * n + 1) / 2.0)
        if ratio < 1.0 and term * ratio / (1.0 - ratio) < tol:
            return max(J, 1)
        J += 1


def spectral_coefficients(tau, J_max):
    """Eigen-side weights (J+1) exp(-tau E_J) of the zonal expansion."""
    return np.array([(J + 1) * math.exp(-tau * level_energy(J)) for J in range(J_max + 1)])


def heat_kernel_spectral(cos_psi, tau, J_max=None):
    """(1/2 pi^2) sum_J (J+1) C_J^1(cos psi) exp(-tau J(J+2)/2)."""
    _check_cos(cos_psi)
    _check_tau(tau)
    if J_max is None:
        J_max = spectral_truncation(tau)
    elif J_max < 1:
        raise DomainError(f"J_max must be at least 1, got {J_max}")
    weights = spectral_coefficients(tau, J_max)
    total = sum(w * gegenbauer_c1(J, cos_psi) for J, w in enumerate(weights))
    LOGGER.debug(f"heat kernel spectral: tau={tau}, J_max={J_max}")
    return total / TWO_PI_SQ


def heat_kernel_theta_detail(cos_psi, tau):
    """
    Closed theta form and the method used.

    exp(tau/2)/(4 pi^2) * (-1/sin psi) d/dpsi Theta_3(psi/2 | i tau/(2 pi)), with the
    psi-derivative taken through a jet. At psi in {0, pi} the spectral sum is returned
    instead and the method is reported as "spectral".
    """
    _check_cos(cos_psi)
    _check_tau(tau)
    psi = math.acos(cos_psi)
    s = math.sin(psi)
    if s < ENDPOINT_SIN:
        LOGGER.debug(f"theta form singular at psi={psi}; using the spectral sum")
        return heat_kernel_spectral(cos_psi, tau), "spectral"
    angle = jets.Jet.variable(psi, 0, 1)
    theta = theta3(angle / 2, 1j * tau / (2.0 * math.pi))
    slope = theta.grad[0].real
    return math.exp(tau / 2.0) / (4.0 * math.pi ** 2) * (-slope / s), "theta"


def heat_kernel_theta(cos_psi, tau):
    return heat_kernel_theta_detail(cos_psi, tau)[0]


def semigroup_check(cos_psi, tau1, tau2):
    """
    Coefficient-level Chapman-Kolmogorov check.

    Returns the larger of two deviations. The first is between exp(-tau1 E) exp(-tau2 E)
    and exp(-(tau1+tau2) E), measured against the leading weight exp(0) = 1. The second
    is between the kernel rebuilt from those products and heat_kernel_spectral at
    tau1+tau2, measured against the sum of absolute terms. High levels carry exponents
    of several hundred, so relative errors of individual weights sit at |tau E| ulps.
    """
    _check_tau(tau1)
    _check_tau(tau2)
    _check_cos(cos_psi)
    J_max = spectral_truncation(min(tau1, tau2))
    energies = np.array([level_energy(J) for J in range(J_max + 1)])
    product = np.exp(-tau1 * energies) * np.exp(-tau2 * energies)
    joint = np.exp(-(tau1 + tau2) * energies)
    coefficient_err = float(np.max(np.abs(product - joint)))
    terms = [(J + 1) * product[J] * gegenbauer_c1(J, cos_psi) for J in range(J_max + 1)]
    rebuilt = sum(terms) / TWO_PI_SQ
    direct = heat_kernel_spectral(cos_psi, tau1 + tau2, J_max)
    scale = sum(abs(t) for t in terms) / TWO_PI_SQ
    kernel_err = abs(rebuilt - direct) / scale
    return max(coefficient_err, kernel_err)


# ---------------------------------------------------------------------------
# Green functions


def _resolvent_parameter(E):
    """a = gamma + 1/2 = sqrt(2E + 1), principal branch."""
    return cmath.sqrt(2.0 * E + 1.0)


def green_sphere(psi, E):
    """(1/2 pi) sin((pi - psi) a) / (sin(pi a) sin psi), a = sqrt(2E+1)."""
    _check_psi(psi)
    a = _resolvent_parameter(E)
    if abs(a) < SMALL_A:
        return (math.pi - psi) / (2.0 * math.pi ** 2 * math.sin(psi))
    if abs(a.imag) < 1e-15 and round(a.real) >= 1 and abs(a.real - round(a.real)) < 1e-12:
        J = int(round(a.real)) - 1
        raise PoleError(f"E={E} is the spectrum point E_{J} = {level_energy(J)}")
    value = cmath.sin((math.pi - psi) * a) / (cmath.sin(math.pi * a) * math.sin(psi)) / (2.0 * math.pi)
    return value.real


def _cubic_sine_sum(psi):
    """sum_n sin(n psi)/n^3 on [0, 2 pi]."""
    return math.pi ** 2 * psi / 6.0 - math.pi * psi ** 2 / 4.0 + psi ** 3 / 12.0


def resolvent_spectral(psi, E, J_max=None):
    """
    (1/2 pi^2) sum_J (J+1) C_J^1(cos psi) / (E_J - E).

    With n = J+1 and a^2 = 2E+1 each term is n sin(n psi)/(n^2 - a^2); the slowly
    convergent 1/n and a^2/n^3 parts are summed in closed form and the a^4 remainder,
    decaying like n^-5, is summed term by term with a monitored tail.
    """
    _check_psi(psi)
    a2 = 2.0 * E + 1.0
    if a2 > 0:
        nearest = max(1, round(math.sqrt(a2)))
        if abs(level_energy(nearest - 1) - E) < POLE_GAP:
            raise ConditioningError(
                f"E={E} within {POLE_GAP:g} of spectrum point E_{nearest - 1} = {level_energy(nearest - 1)}")
    if J_max is None:
        J_max = RESOLVENT_MIN_TERMS
        while not _remainder_tail(a2, J_max + 1) < RESOLVENT_TAIL_TOL:
            J_max *= 2
    n = np.arange(1, J_max + 2, dtype=float)
    remainder = float(np.sum(np.sin(n * psi) / (n ** 3 * (n * n - a2))))
    total = (math.pi - psi) / 2.0 + a2 * _cubic_sine_sum(psi) + a2 * a2 * remainder
    LOGGER.debug(f"resolvent: psi={psi}, E={E}, J_max={J_max}, tail bound {_remainder_tail(a2, J_max + 1):.2e}")
    return total / (math.pi ** 2 * math.sin(psi))


def _remainder_tail(a2, N):
    """Bound on a^4 sum_{n>N} 1/(n^3 |n^2 - a^2|)."""
    if N * N <= 2.0 * abs(a2):
        return math.inf
    return a2 * a2 / (2.0 * N ** 4) / (1.0 - abs(a2) / N ** 2)


def green_hyperboloid(d, E):
    """-(1/(pi^2 sinh d)) Q^{1/2}_{-1/2 - i p}(cosh d), p = sqrt(2E - 1) principal branch."""
    if d <= 0:
        raise DomainError(f"geodesic distance must be positive, got {d}")
    p = cmath.sqrt(2.0 * E - 1.0)
    return -legendre_Q_half(-0.5 - 1j * p, math.cosh(d)) / (math.pi ** 2 * math.sinh(d))


def pole_scan(E_range, n_poles, step=0.05):
    """First ``n_poles`` zeros of sin(pi sqrt(2E+1)) in ``E_range``, by grid bracketing and brentq."""
    lo, hi = E_range
    lo = max(lo, -0.5 + 1e-9)
    if hi <= lo:
        raise DomainError(f"empty energy range ({lo}, {hi})")

    def denominator(E):
        return math.sin(math.pi * math.sqrt(2.0 * E + 1.0))

    grid = np.linspace(lo, hi, max(2, int(math.ceil((hi - lo) / step)) + 1))
    values = [denominator(E) for E in grid]
    poles = []
    for left, right, f_left, f_right in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if f_left == 0.0:
            root = float(left)
        elif f_left * f_right < 0:
            root = brentq(denominator, left, right, xtol=1e-14, rtol=4 * np.finfo(float).eps)
        else:
            continue
        if not poles or abs(root - poles[-1]) > 1e-9:
            poles.append(root)
        if len(poles) == n_poles:
            return poles
    raise DomainError(f"range {E_range} holds only {len(poles)} of {n_poles} requested poles")

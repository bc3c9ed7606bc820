"""
test_kernel.py: distances, heat kernels and Green functions
"""

import cmath
import math

import numpy as np
import pytest

from sphere3c.embedding import CoordTriple, dot4, embed
from sphere3c.errors import ConditioningError, DomainError, PoleError
from sphere3c.kernel import (cos_psi_spherical, cosh_d_hyperboloid, green_hyperboloid, green_sphere,
                             heat_kernel_spectral, heat_kernel_theta, heat_kernel_theta_detail,
                             hyperboloid_point, minkowski_pairing, pole_scan, resolvent_spectral,
                             semigroup_check, spectral_truncation)


class TestDistances:
    """Invariant distances on the sphere and the hyperboloid."""

    def test_spherical_special_points(self):
        """Coincident points give 1, antipodal points give -1."""
        a = (0.7, 1.1, 2.0)
        assert abs(cos_psi_spherical(a, a) - 1.0) < 1e-15
        assert cos_psi_spherical((0.0, 0.0, 0.0), (math.pi, 0.0, 0.0)) == -1.0

    def test_matches_embedding(self):
        """cos(psi) is the bilinear pairing of the embedded points."""
        a, b = (0.7, 1.1, 2.0), (2.1, 0.4, 5.5)
        expected = dot4(embed(CoordTriple(3, a)), embed(CoordTriple(3, b))).real
        assert abs(cos_psi_spherical(a, b) - expected) < 1e-12

    def test_hyperboloid(self):
        """Origin to radius tau, symmetry, and agreement with the Minkowski pairing."""
        assert cosh_d_hyperboloid((0.0, 0.3, 0.1), (1.7, 2.0, 0.5)) == pytest.approx(math.cosh(1.7), rel=1e-15)
        p, q = (0.8, 0.4, 1.0), (1.3, 2.2, 4.0)
        assert cosh_d_hyperboloid(p, q) == cosh_d_hyperboloid(q, p)
        pairing = minkowski_pairing(hyperboloid_point(*p), hyperboloid_point(*q))
        assert abs(cosh_d_hyperboloid(p, q) - pairing) < 1e-12
        assert cosh_d_hyperboloid(p, p) == pytest.approx(1.0, abs=1e-14)

    def test_negative_radius(self):
        """Geodesic polar radius must be nonnegative."""
        with pytest.raises(DomainError):
            cosh_d_hyperboloid((-0.1, 0.0, 0.0), (1.0, 0.0, 0.0))


class TestHeatKernel:
    """Spectral sum against the theta-function closed form."""

    def test_spectral_at_coincidence(self):
        """(1/2 pi^2) sum (J+1)^2 exp(-J(J+2)/2) at tau = 1."""
        assert abs(heat_kernel_spectral(1.0, 1.0) - 0.104688) < 1e-5

    def test_spectral_equator(self):
        """psi = pi/2, tau = 1."""
        assert abs(heat_kernel_spectral(0.0, 1.0) - 0.047878) < 1e-5
        assert abs(heat_kernel_theta(0.0, 1.0) - 0.047878) < 1e-5

    def test_long_time_limit(self):
        """Only the constant mode survives: 1/(2 pi^2)."""
        assert abs(heat_kernel_spectral(math.cos(1.0), 60.0) - 1.0 / (2.0 * math.pi ** 2)) < 1e-15

    @pytest.mark.parametrize("psi", [0.3, 1.0, 2.0, 3.0])
    @pytest.mark.parametrize("tau", [0.25, 0.5, 1.0, 2.0])
    def test_theta_identity(self, psi, tau):
        """Both forms agree to 1e-10 and stay positive."""
        spectral = heat_kernel_spectral(math.cos(psi), tau)
        theta, method = heat_kernel_theta_detail(math.cos(psi), tau)
        assert method == "theta"
        assert spectral > 0 and theta > 0
        assert abs(spectral - theta) <= 1e-10, f"psi={psi} tau={tau}: {spectral} vs {theta}"

    def test_endpoint_fallback(self):
        """At psi = 0 the theta form is singular and the spectral sum is reported."""
        value, method = heat_kernel_theta_detail(1.0, 0.5)
        assert method == "spectral"
        assert value == heat_kernel_spectral(1.0, 0.5)

    def test_truncation_shrinks_with_tau(self):
        """Longer times need fewer levels."""
        assert spectral_truncation(0.1) > spectral_truncation(1.0) >= 1

    def test_semigroup(self):
        """exp(-t1 H) exp(-t2 H) = exp(-(t1+t2) H) at coefficient and kernel level."""
        for psi in (0.3, 1.0, 3.0):
            for tau1, tau2 in ((0.25, 0.25), (0.5, 0.7), (2.0, 2.0)):
                err = semigroup_check(math.cos(psi), tau1, tau2)
                assert err < 1e-14, f"psi={psi} tau=({tau1}, {tau2}): {err:.2e}"

    @pytest.mark.parametrize("cos_psi,tau", [(1.2, 1.0), (0.5, 0.0), (0.5, -1.0)])
    def test_domain(self, cos_psi, tau):
        """|cos psi| <= 1 and tau > 0."""
        with pytest.raises(DomainError):
            heat_kernel_spectral(cos_psi, tau)


class TestGreenFunctions:
    """Resolvent kernels on S3 and H3."""

    def test_sphere_closed_value(self):
        """psi = pi/2, E = -3/8 gives a = 1/2 and sqrt(2)/(4 pi)."""
        assert abs(green_sphere(math.pi / 2, -0.375) - math.sqrt(2.0) / (4.0 * math.pi)) < 1e-15

    def test_sphere_pole(self):
        """E = 3/2 is the J = 1 level."""
        with pytest.raises(PoleError):
            green_sphere(1.0, 1.5)

    def test_sphere_zero_parameter(self):
        """E = -1/2 uses the a -> 0 limit."""
        assert abs(green_sphere(1.0, -0.5) - (math.pi - 1.0) / (2.0 * math.pi ** 2 * math.sin(1.0))) < 1e-15

    @pytest.mark.parametrize("psi", [0.8, 1.6, 2.4])
    @pytest.mark.parametrize("E", [-1.0, -0.5, -0.375, 0.7, 2.2])
    def test_resolvent_identity(self, psi, E):
        """Closed form equals the eigen-expansion to 1e-6 relative."""
        closed = green_sphere(psi, E)
        series = resolvent_spectral(psi, E)
        assert abs(closed - series) <= 1e-6 * max(abs(closed), 1e-12), f"psi={psi} E={E}: {closed} vs {series}"

    def test_resolvent_truncation_stable(self):
        """Doubling the number of levels changes the sum below 1e-8."""
        a = resolvent_spectral(1.3, -0.8, J_max=400)
        b = resolvent_spectral(1.3, -0.8, J_max=800)
        assert abs(a - b) < 1e-8

    def test_resolvent_conditioning(self):
        """Energies within 1e-6 of a level are refused."""
        with pytest.raises(ConditioningError):
            resolvent_spectral(1.0, 1.5 + 1e-7)

    def test_hyperboloid_threshold(self):
        """At E = 1/2, Q^{1/2}_{-1/2} is elementary."""
        d = 0.9
        expected = -1j * math.sqrt(math.pi / (2.0 * math.sinh(d))) / (math.pi ** 2 * math.sinh(d))
        assert abs(green_hyperboloid(d, 0.5) - expected) < 1e-15

    def test_hyperboloid_scattering_phase(self):
        """Above threshold the ratio G(d2)/G(d1) has modulus (sinh d1/sinh d2)^{3/2} and phase p (d2 - d1)."""
        d1, d2 = 0.7, 1.7
        ratio = green_hyperboloid(d2, 2.5) / green_hyperboloid(d1, 2.5)
        assert abs(abs(ratio) - (math.sinh(d1) / math.sinh(d2)) ** 1.5) < 1e-13
        assert abs(cmath.phase(ratio) - 2.0) < 1e-12

    def test_hyperboloid_distance(self):
        """d must be positive."""
        with pytest.raises(DomainError):
            green_hyperboloid(0.0, 1.0)


class TestPoles:
    """Zeros of sin(pi sqrt(2E+1))."""

    def test_first_six(self):
        """The spectrum 0, 3/2, 4, 15/2, 12, 35/2."""
        poles = pole_scan((-0.4, 20.0), 6)
        expected = [J * (J + 2) / 2.0 for J in range(6)]
        assert np.max(np.abs(np.array(poles) - expected)) < 1e-8, f"poles {poles}"

    def test_insufficient_range(self):
        """Too few poles in range."""
        with pytest.raises(DomainError):
            pole_scan((-0.4, 5.0), 6)

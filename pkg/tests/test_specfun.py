"""
test_specfun.py: special functions against independent oracles

Oracles: mpmath at working precision, scipy.special, defining ODEs through jets,
and exact identities (Jacobi elliptic, Gegenbauer closed forms).
"""

import cmath
import math

import mpmath
import numpy as np
import pytest
from scipy import special

from sphere3c import jets, specfun
from sphere3c.errors import DomainError, PoleError, RegionError
from sphere3c.jets import Jet


def _rel(a, b):
    return abs(complex(a) - complex(b)) / max(abs(complex(b)), 1e-300)


class TestGamma:
    """Lanczos gamma with reflection."""

    @pytest.mark.parametrize("z", [0.5, 1.0, 4.25, 10.5, -0.5, -3.7, 1 + 1j, 0.2 - 3j, -2.5 + 0.5j])
    def test_against_mpmath(self, z):
        """Relative error below 1e-13."""
        err = _rel(specfun.gamma_complex(z), complex(mpmath.gamma(z)))
        assert err < 1e-13, f"Gamma({z}) rel err {err:.2e}"

    def test_poles(self):
        """Nonpositive integers raise PoleError; rgamma is zero there."""
        with pytest.raises(PoleError):
            specfun.gamma_complex(-2)
        assert specfun.rgamma(0) == 0.0


class TestHypergeometric:
    """2F1 and 1F1."""

    @pytest.mark.parametrize("a,b,c,z", [
        (0.5, 1.5, 2.25, 0.3),
        (0.5, 1.5, 2.25, -0.8),
        (0.5, 1.5, 2.25, 0.8),
        (1 + 0.5j, 1 - 0.5j, 1.5, -3.0),
        (0.25, 0.75, 1.7, 0.95),
        (-3, 2.5, 1.5, 7.0),
    ])
    def test_hyp2f1_against_mpmath(self, a, b, c, z):
        """All three transformation regions and the terminating case."""
        err = _rel(specfun.hyp2f1(a, b, c, z), complex(mpmath.hyp2f1(a, b, c, z)))
        assert err < 1e-11, f"2F1({a},{b};{c};{z}) rel err {err:.2e}"

    def test_hyp2f1_region_error(self):
        """Arguments far outside every transformed disc fail loudly."""
        with pytest.raises(RegionError):
            specfun.hyp2f1(0.5, 1.5, 2.25, -30.0)

    def test_hyp2f1_parameter_pole(self):
        """c a nonpositive integer without earlier termination is a pole."""
        with pytest.raises(PoleError):
            specfun.hyp2f1(0.5, 1.5, -2, 0.1)

    @pytest.mark.parametrize("a,c,z", [(0.5, 1.5, -10.0), (0.5, 1.5, 4.0), (-3, 0.5, 2.0), (1 + 1j, 2.5, -1.0)])
    def test_hyp1f1_against_mpmath(self, a, c, z):
        """Kummer transformation for negative arguments."""
        err = _rel(specfun.hyp1f1(a, c, z), complex(mpmath.hyp1f1(a, c, z)))
        assert err < 1e-12, f"1F1({a};{c};{z}) rel err {err:.2e}"

    def test_hyp1f1_region(self):
        """|z| > 60 is outside the supported region."""
        with pytest.raises(RegionError):
            specfun.hyp1f1(0.5, 1.5, 80.0)


class TestOrthogonalPolynomials:
    """Three-term recurrences against scipy and mpmath."""

    @pytest.mark.parametrize("n,alpha,beta", [(0, 1.0, 2.0), (4, 1.0, 2.0), (7, 0.5, -0.5), (10, 3.0, 0.0)])
    def test_jacobi(self, n, alpha, beta):
        """P_n^(alpha, beta) on a grid in [-1, 1]."""
        for x in np.linspace(-1.0, 1.0, 9):
            ours = specfun.orthopoly_eval("jacobi", n, (alpha, beta), x)
            ref = special.eval_jacobi(n, alpha, beta, x)
            assert abs(ours - ref) < 1e-12 * max(1.0, abs(ref)), f"P_{n}({x}) = {ours} vs {ref}"

    def test_gegenbauer_closed_form(self):
        """C_n^1(cos t) = sin((n+1) t)/sin t."""
        for n in range(8):
            for t in (0.3, 1.1, 2.5):
                ours = specfun.orthopoly_eval("gegenbauer", n, (1.0,), math.cos(t))
                ref = math.sin((n + 1) * t) / math.sin(t)
                assert abs(ours - ref) < 1e-12, f"C_{n}^1 = {ours} vs {ref}"

    def test_gegenbauer_scipy(self):
        """Half-integer parameter against scipy."""
        ours = specfun.orthopoly_eval("gegenbauer", 5, (2.5,), 0.4)
        assert _rel(ours, special.eval_gegenbauer(5, 2.5, 0.4)) < 1e-13

    @pytest.mark.parametrize("alpha", [0.5, 2.0, -3.0, -4.5])
    def test_laguerre_nonclassical(self, alpha):
        """Generalized Laguerre for any parameter when allowed."""
        for x in (0.1, 1.0, 3.5):
            ours = specfun.orthopoly_eval("laguerre", 4, (alpha,), x, allow_nonclassical=True)
            ref = float(mpmath.laguerre(4, alpha, x))
            assert abs(ours - ref) < 1e-12 * max(1.0, abs(ref)), f"L_4^{alpha}({x}) = {ours} vs {ref}"

    def test_classical_guard(self):
        """Nonclassical parameters are refused unless explicitly allowed."""
        with pytest.raises(DomainError):
            specfun.orthopoly_eval("laguerre", 2, (-2.0,), 1.0)
        with pytest.raises(DomainError):
            specfun.orthopoly_eval("hermite", 2, (), 1.0)

    def test_jet_argument(self):
        """Derivative of P_3^(1,2) matches the derivative identity."""
        x = Jet.variable(0.3, 0, 1)
        p = specfun.orthopoly_eval("jacobi", 3, (1.0, 2.0), x)
        slope = 0.5 * (3 + 1.0 + 2.0 + 1) * special.eval_jacobi(2, 2.0, 3.0, 0.3)
        assert abs(p.grad[0] - slope) < 1e-12, f"{p.grad[0]} vs {slope}"


class TestLegendre:
    """Legendre functions of complex degree and order."""

    @pytest.mark.parametrize("nu,mu,x", [
        (2.5, -1.5, 0.3),
        (3.5, -0.5, -0.7),
        (-0.5 + 1.2j, 0.7j, 0.4),
        (-0.5 + 1.2j, 0.7j, -0.8),
        (2.0, 0.0, 1.0),
    ])
    def test_ferrers_against_mpmath(self, nu, mu, x):
        """-1 < x <= 1 uses the Ferrers convention."""
        ref = complex(mpmath.legenp(nu, mu, x, type=2))
        err = _rel(specfun.legendre_P(nu, mu, x), ref)
        assert err < 1e-11, f"P_{nu}^{mu}({x}) rel err {err:.2e}"

    @pytest.mark.parametrize("nu,mu,x", [(-0.5 + 0.8j, -1.5, 1.5), (2.5, -0.5, 3.0)])
    def test_outside_cut_against_mpmath(self, nu, mu, x):
        """x > 1 uses ((x+1)/(x-1))^(mu/2)."""
        ref = complex(mpmath.legenp(nu, mu, x, type=3))
        err = _rel(specfun.legendre_P(nu, mu, x), ref)
        assert err < 1e-11, f"P_{nu}^{mu}({x}) rel err {err:.2e}"

    def test_errors(self):
        """Left of the cut fails; 1 - mu at a gamma pole fails."""
        with pytest.raises(RegionError):
            specfun.legendre_P(1.5, -0.5, -1.2)
        with pytest.raises(PoleError):
            specfun.legendre_P(1.5, 2.0, 0.3)

    def test_q_half_closed_value(self):
        """Q^{1/2}_{-1/2}(cosh d) = i sqrt(pi/(2 sinh d))."""
        d = 1.3
        ours = specfun.legendre_Q_half(-0.5, math.cosh(d))
        assert _rel(ours, 1j * math.sqrt(math.pi / (2 * math.sinh(d)))) < 1e-14

    @pytest.mark.parametrize("nu", [-0.5 - 2j, 1.5, 0.25 + 0.5j])
    def test_q_half_solves_legendre_equation(self, nu):
        """(1-u^2)Q'' - 2uQ' + [nu(nu+1) - (1/4)/(1-u^2)]Q = 0."""
        for u0 in (1.2, 2.0, 5.0):
            q = specfun.legendre_Q_half(nu, Jet.variable(u0, 0, 1))
            residual = ((1 - u0 * u0) * q.hess[0, 0] - 2 * u0 * q.grad[0]
                        + (nu * (nu + 1) - 0.25 / (1 - u0 * u0)) * q.val)
            assert abs(residual) < 1e-12 * max(1.0, abs(q.val)), f"u={u0}: residual {abs(residual):.2e}"

    def test_q_half_domain(self):
        """u <= 1 is rejected."""
        with pytest.raises(DomainError):
            specfun.legendre_Q_half(0.5, 0.9)


class TestBessel:
    """Bessel family against scipy and mpmath."""

    @pytest.mark.parametrize("nu,z", [(0, 0.5), (2.5, 5.0), (-3, 7.0), (1.0, 11.5), (0.5, 20.0), (3.0, 45.0)])
    def test_j_real(self, nu, z):
        """Series up to 12, Schlafli integral beyond."""
        err = abs(specfun.bessel_j(nu, z) - special.jv(nu, z))
        assert err < 1e-11, f"J_{nu}({z}) abs err {err:.2e}"

    def test_j_complex_argument(self):
        """Series for complex arguments."""
        z = 2.0 - 1.5j
        assert _rel(specfun.bessel_j(1.5, z), special.jv(1.5, z)) < 1e-12

    def test_j_region(self):
        """Complex arguments beyond the series disc are refused."""
        with pytest.raises(RegionError):
            specfun.bessel_j(1.0, 20.0 + 1.0j)

    @pytest.mark.parametrize("n,z", [(0, 0.7), (1, 3.0), (4, 2.0 - 0.8j), (6, 1.1 + 0.2j)])
    def test_hankel_integer(self, n, z):
        """H = J + iY with the Neumann series."""
        err = _rel(specfun.hankel1_integer(n, z), special.hankel1(n, z))
        assert err < 1e-11, f"H1_{n}({z}) rel err {err:.2e}"

    @pytest.mark.parametrize("nu,z", [(0.5, 1.0), (2.5, 0.8), (4.5, 1.3 - 0.6j), (-1.5, 2.0)])
    def test_hankel_half_integer(self, nu, z):
        """Closed form against scipy."""
        err = _rel(specfun.hankel1_half_integer(nu, z), special.hankel1(nu, z))
        assert err < 1e-12, f"H1_{nu}({z}) rel err {err:.2e}"

    def test_hankel_half_integer_guard(self):
        """Orders that are not half-integers are rejected."""
        with pytest.raises(RegionError):
            specfun.hankel1_half_integer(1.0, 1.0)

    @pytest.mark.parametrize("k,x", [(0.5, 0.2), (1.5, 1.0), (4.0, 3.5), (9.0, 8.0)])
    def test_k_imaginary_order(self, k, x):
        """K_(ik)(x) against mpmath."""
        ref = float(mpmath.re(mpmath.besselk(1j * k, x)))
        err = abs(specfun.bessel_k_imag(k, x) - ref)
        assert err < 1e-12 * max(1.0, abs(ref)) + 1e-15, f"K_i{k}({x}) abs err {err:.2e}"

    def test_k_imaginary_order_derivatives(self):
        """Jet evaluation satisfies x^2 K'' + x K' - (x^2 - k^2) K = 0."""
        k, x0 = 1.5, 1.7
        f = specfun.bessel_k_imag(k, Jet.variable(x0, 0, 1))
        residual = x0 * x0 * f.hess[0, 0] + x0 * f.grad[0] - (x0 * x0 - k * k) * f.val
        assert abs(residual) < 1e-11, f"Bessel ODE residual {abs(residual):.2e}"

    def test_k_imaginary_region(self):
        """Small arguments and large orders are outside the region."""
        with pytest.raises(RegionError):
            specfun.bessel_k_imag(1.0, 0.05)
        with pytest.raises(RegionError):
            specfun.bessel_k_imag(12.0, 1.0)

    @pytest.mark.parametrize("nu,x", [(1 / 3, 0.3), (2.5, 1.0), (0.0, 5.0)])
    def test_k_real_order(self, nu, x):
        """K_nu(x) against scipy."""
        assert _rel(specfun.bessel_k_real(nu, x), special.kv(nu, x)) < 1e-11

    @pytest.mark.parametrize("nu,z", [(1.0, 0.5), (2.5, 3.0), (-2, 4.0)])
    def test_i_real_order(self, nu, z):
        """I_nu series against scipy."""
        assert _rel(specfun.bessel_i(nu, z), special.iv(nu, z)) < 1e-13

    def test_dispatch(self):
        """bessel_eval routes by kind and rejects unknown kinds."""
        assert specfun.bessel_eval("J_real_order", 1.0, 2.0) == specfun.bessel_j(1.0, 2.0)
        with pytest.raises(DomainError):
            specfun.bessel_eval("Y_real_order", 1.0, 2.0)


class TestAiry:
    """Ai(t) on the three branches."""

    @pytest.mark.parametrize("t", [-18.0, -10.0, -7.5, -5.0, -1.0, 0.0, 1.5, 2.5, 6.0, 15.0])
    def test_against_scipy(self, t):
        """Maclaurin, oscillatory asymptotic and K_{1/3} branches."""
        ours = specfun.airy_ai(t)
        ref = special.airy(t)[0]
        assert isinstance(ours, float)
        assert abs(ours - ref) < 1e-10 * max(1e-3, abs(ref)), f"Ai({t}) = {ours} vs {ref}"

    def test_range(self):
        """|t| > 20 fails loudly."""
        with pytest.raises(RegionError):
            specfun.airy_ai(25.0)


class TestElliptic:
    """Complete integral and Jacobi elliptic functions."""

    @pytest.mark.parametrize("k", [0.1, math.sqrt(0.5), 0.95])
    def test_complete_integral(self, k):
        """K(k) against scipy (parameter m = k^2)."""
        assert _rel(specfun.elliptic_k(k), special.ellipk(k * k)) < 1e-14

    @pytest.mark.parametrize("u", [0.2, 1.0, 2.7, -1.4])
    def test_jacobi_identities(self, u):
        """sn^2 + cn^2 = 1, dn^2 = 1 - k^2 sn^2 and agreement with scipy."""
        k = math.sqrt(0.5)
        sn, cn, dn = specfun.jacobi_elliptic(u, k)
        assert abs(sn * sn + cn * cn - 1.0) < 1e-12
        assert abs(dn * dn - (1.0 - k * k * sn * sn)) < 1e-12
        ref = special.ellipj(u, k * k)
        assert max(abs(sn - ref[0]), abs(cn - ref[1]), abs(dn - ref[2])) < 1e-12

    def test_jet_derivative(self):
        """d sn/du = cn dn."""
        k = 0.6
        sn, cn, dn = specfun.jacobi_elliptic(Jet.variable(0.9, 0, 1), k)
        assert abs(sn.grad[0] - cn.val * dn.val) < 1e-14

    def test_modulus_range(self):
        """k outside (0, 1) is rejected."""
        with pytest.raises(DomainError):
            specfun.elliptic_k(1.0)


class TestTheta:
    """Theta_3 against mpmath.jtheta."""

    @pytest.mark.parametrize("v,tau", [(0.0, 0.5j), (0.7, 0.5j), (1.2, 0.1j), (0.3 + 0.2j, 1.0 + 0.8j)])
    def test_against_mpmath(self, v, tau):
        """Nome q = exp(i pi tau)."""
        q = cmath.exp(1j * math.pi * tau)
        ref = complex(mpmath.jtheta(3, v, q))
        err = _rel(specfun.theta3(v, tau), ref)
        assert err < 1e-13, f"theta3({v}|{tau}) rel err {err:.2e}"

    def test_derivative(self):
        """d/dv Theta_3 against mpmath's derivative."""
        tau = 0.3j
        q = cmath.exp(1j * math.pi * tau)
        out = specfun.theta3(Jet.variable(0.4, 0, 1), tau)
        ref = complex(mpmath.jtheta(3, 0.4, q, 1))
        assert _rel(out.grad[0], ref) < 1e-12

    def test_upper_half_plane(self):
        """Im tau <= 0 is rejected."""
        with pytest.raises(DomainError):
            specfun.theta3(0.1, 1.0)

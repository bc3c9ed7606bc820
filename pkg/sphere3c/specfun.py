"""
Special functions used by the charts, eigenbases and kernels.

Every function documents the region where it is reliable and raises
``RegionError`` outside it. Functions marked jet-aware accept a ``Jet``
argument and return a ``Jet`` carrying exact first and second derivatives.
"""

import cmath
import logging
import math

from scipy import integrate

from sphere3c import jets
from sphere3c.errors import DomainError, PoleError, RegionError
from sphere3c.jets import Jet, magnitude, real_value, value

LOGGER = logging.getLogger("verification.specfun")

SERIES_EPS = 1e-17
MAX_TERMS = 5000
EULER_GAMMA = 0.5772156649015329

# Lanczos coefficients, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

AIRY_C1 = 0.355028053887817239  # Ai(0)
AIRY_C2 = 0.258819403792806798  # -Ai'(0)


def _is_integer(x, tol=1e-12):
    x = complex(x)
    return abs(x.imag) < tol and abs(x.real - round(x.real)) < tol


def _is_nonpositive_int(x):
    return _is_integer(x) and round(complex(x).real) <= 0


def _converged(term, total):
    return magnitude(term) <= SERIES_EPS * max(magnitude(total), 1e-300)


# ---------------------------------------------------------------------------
# Gamma


def gamma_complex(z):
    """Gamma function for complex ``z`` (Lanczos with reflection)."""
    z = complex(z)
    if _is_nonpositive_int(z):
        raise PoleError(f"gamma pole at z={z}")
    if z.real < 0.5:
        return cmath.pi / (cmath.sin(cmath.pi * z) * gamma_complex(1.0 - z))
    z -= 1.0
    x = _LANCZOS_P[0]
    for i in range(1, len(_LANCZOS_P)):
        x += _LANCZOS_P[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * cmath.exp((z + 0.5) * cmath.log(t) - t) * x


def rgamma(z):
    """Reciprocal gamma, zero at the poles."""
    if _is_nonpositive_int(z):
        return 0.0
    return 1.0 / gamma_complex(z)


# ---------------------------------------------------------------------------
# Hypergeometric functions


def _hyp2f1_series(a, b, c, z):
    term = 1.0
    total = 1.0
    for n in range(MAX_TERMS):
        num = (a + n) * (b + n)
        if num == 0:
            return total
        term = term * (num / ((c + n) * (n + 1))) * z
        total = total + term
        if n > 2 and _converged(term, total):
            return total
    raise RegionError(f"2F1({a}, {b}; {c}; {value(z)}) series did not converge")


def _hyp2f1_pfaff(a, b, c, z):
    return (1.0 - z) ** (-a) * _hyp2f1_series(a, c - b, c, z / (z - 1.0))


def _hyp2f1_reflected(a, b, c, z):
    s = c - a - b
    w = 1.0 - z
    g1 = gamma_complex(c) * gamma_complex(s) * rgamma(c - a) * rgamma(c - b)
    g2 = gamma_complex(c) * gamma_complex(-s) * rgamma(a) * rgamma(b)
    out = 0.0
    if g1 != 0:
        out = out + g1 * _hyp2f1_series(a, b, 1.0 - s, w)
    if g2 != 0:
        out = out + g2 * w ** s * _hyp2f1_series(c - a, c - b, s + 1.0, w)
    return out


def hyp2f1(a, b, c, z):
    """
    Gauss hypergeometric function 2F1(a, b; c; z). Jet-aware in ``z``.

    Reliable region: the direct series for |z| <= 0.5, the Pfaff transform
    when |z/(z-1)| <= 0.5, the 1-z connection formula when |1-z| <= 0.5 and
    c-a-b is not an integer; otherwise the best of those with modulus < 0.9.
    Terminating series are summed for any z.
    """
    a, b, c = complex(a), complex(b), complex(c)
    degree = math.inf
    for p in (a, b):
        if _is_nonpositive_int(p):
            degree = min(degree, -round(p.real))
    if _is_nonpositive_int(c) and not degree <= -round(c.real):
        raise PoleError(f"2F1 parameter pole at c={c}")
    if degree < math.inf:
        return _hyp2f1_series(a, b, c, z)

    zv = value(z)
    if abs(zv) <= 0.5:
        return _hyp2f1_series(a, b, c, z)
    reflectable = not _is_integer(c - a - b)
    options = [(abs(zv), _hyp2f1_series)]
    if zv != 1.0:
        options.append((abs(zv / (zv - 1.0)), _hyp2f1_pfaff))
    if reflectable:
        options.append((abs(1.0 - zv), _hyp2f1_reflected))
    modulus, method = min(options, key=lambda item: item[0])
    if modulus >= 0.9:
        raise RegionError(f"2F1 argument z={zv} outside the supported region")
    LOGGER.debug(f"2F1 z={zv:.6g} via {method.__name__} (|w|={modulus:.3g})")
    return method(a, b, c, z)


def _hyp1f1_series(a, c, z):
    term = 1.0
    total = 1.0
    for n in range(MAX_TERMS):
        if a + n == 0:
            return total
        term = term * ((a + n) / ((c + n) * (n + 1))) * z
        total = total + term
        if n > 2 and _converged(term, total):
            return total
    raise RegionError(f"1F1({a}; {c}; {value(z)}) series did not converge")


def hyp1f1(a, c, z):
    """Confluent hypergeometric function 1F1(a; c; z) for |z| <= 60. Jet-aware in ``z``."""
    a, c = complex(a), complex(c)
    terminating = _is_nonpositive_int(a)
    if _is_nonpositive_int(c) and not (terminating and -round(a.real) <= -round(c.real)):
        raise PoleError(f"1F1 parameter pole at c={c}")
    zv = value(z)
    if abs(zv) > 60.0:
        raise RegionError(f"1F1 argument |z|={abs(zv):.3g} exceeds 60")
    if not terminating and zv.real < 0:
        # Kummer transformation keeps the series free of cancellation
        return jets.exp(z) * _hyp1f1_series(c - a, c, -z)
    return _hyp1f1_series(a, c, z)


# ---------------------------------------------------------------------------
# Orthogonal polynomials


def orthopoly_eval(family, n, params, x, allow_nonclassical=False):
    """
    Classical orthogonal polynomials by three-term recurrence. Jet-aware in ``x``.

    family: "jacobi" (params (alpha, beta)), "gegenbauer" (params (lam,)) or
    "laguerre" (params (alpha,)). ``allow_nonclassical`` lifts the parameter
    restrictions; the recurrence itself is valid for any parameters.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {n}")
    n = int(n)
    family = family.lower()

    if family == "jacobi":
        alpha, beta = params
        if not allow_nonclassical and (alpha <= -1 or beta <= -1):
            raise DomainError(f"Jacobi parameters must exceed -1, got ({alpha}, {beta})")
        if n == 0:
            return 1.0
        prev = 1.0
        cur = (alpha + 1) + (alpha + beta + 2) * (x - 1) / 2
        for k in range(2, n + 1):
            s = 2 * k + alpha + beta
            a1 = 2 * k * (k + alpha + beta) * (s - 2)
            a2 = (s - 1) * (alpha * alpha - beta * beta)
            a3 = (s - 2) * (s - 1) * s
            a4 = 2 * (k + alpha - 1) * (k + beta - 1) * s
            prev, cur = cur, ((a2 + a3 * x) * cur - a4 * prev) / a1
        return cur

    if family == "gegenbauer":
        (lam,) = params
        if not allow_nonclassical and (lam <= -0.5 or lam == 0):
            raise DomainError(f"Gegenbauer parameter must satisfy lam > -1/2, lam != 0, got {lam}")
        if n == 0:
            return 1.0
        prev = 1.0
        cur = 2 * lam * x
        for k in range(2, n + 1):
            prev, cur = cur, (2 * (k + lam - 1) * x * cur - (k + 2 * lam - 2) * prev) / k
        return cur

    if family == "laguerre":
        (alpha,) = params
        if not allow_nonclassical and alpha <= -1:
            raise DomainError(f"Laguerre parameter must exceed -1, got {alpha}")
        if n == 0:
            return 1.0
        prev = 1.0
        cur = 1 + alpha - x
        for k in range(2, n + 1):
            prev, cur = cur, ((2 * k - 1 + alpha - x) * cur - (k - 1 + alpha) * prev) / k
        return cur

    raise DomainError(f"unknown polynomial family '{family}'")


# ---------------------------------------------------------------------------
# Legendre functions


def legendre_P(nu, mu, x):
    """
    Legendre function P_nu^mu(x) through its 2F1 representation. Jet-aware in ``x``.

    For -1 < x < 1 this is the Ferrers function; for x > 1 the factor
    ((x+1)/(x-1))^(mu/2) is used, which solves the same Legendre equation.
    """
    nu, mu = complex(nu), complex(mu)
    xv = real_value(x)
    rg = rgamma(1.0 - mu)
    if rg == 0:
        raise PoleError(f"1-mu={1.0 - mu} is a nonpositive integer")
    if xv <= -1.0:
        raise RegionError(f"Legendre argument {xv} <= -1")
    if mu == 0:
        factor = 1.0
    elif -1.0 < xv < 1.0:
        factor = ((1.0 + x) / (1.0 - x)) ** (mu / 2)
    elif xv > 1.0:
        factor = ((x + 1.0) / (x - 1.0)) ** (mu / 2)
    else:
        raise RegionError("Legendre function with mu != 0 is singular at x=1")
    return factor * hyp2f1(-nu, nu + 1.0, 1.0 - mu, (1.0 - x) / 2) * rg


def legendre_Q_half(nu, u):
    """Q_nu^{1/2}(u) for u = cosh d > 1 in closed form. Jet-aware in ``u``."""
    if real_value(u) <= 1.0:
        raise DomainError(f"legendre_Q_half needs u > 1, got {value(u)}")
    root = jets.sqrt(u * u - 1.0)
    return 1j * math.sqrt(math.pi / 2) * root ** (-0.5) * (u + root) ** (-(complex(nu) + 0.5))


# ---------------------------------------------------------------------------
# Bessel functions

BESSEL_SERIES_MAX_ARG = 12.0
BESSEL_MAX_ARG = 100.0
BESSEL_MAX_ORDER = 50.0


def _power_half(z, nu):
    if nu == 0:
        return 1.0
    if _is_integer(nu) and nu > 0:
        return (z / 2) ** int(round(nu))
    return (z / 2) ** complex(nu)


def _bessel_j_series(nu, z):
    term = rgamma(nu + 1.0)
    q = -(z * z) / 4
    total = term
    for m in range(1, MAX_TERMS):
        term = term * q / (m * (m + nu))
        total = total + term
        if m > 2 and _converged(term, total):
            return _power_half(z, nu) * total
    raise RegionError(f"J_{nu} series did not converge at z={value(z)}")


def _bessel_j_integral(nu, x):
    first, _ = integrate.quad(lambda th: math.cos(nu * th - x * math.sin(th)), 0.0, math.pi,
                              limit=400, epsabs=1e-14, epsrel=1e-13)
    out = first / math.pi
    if not _is_integer(nu):
        second, _ = integrate.quad(lambda t: math.exp(-x * math.sinh(t) - nu * t), 0.0, math.inf,
                                   limit=400, epsabs=1e-15, epsrel=1e-13)
        out -= math.sin(nu * math.pi) / math.pi * second
    return out


def bessel_j(nu, z):
    """
    Bessel J_nu for real order |nu| <= 50. Jet-aware.

    Series for |z| <= 12 (complex z allowed); Schlafli integral for real
    12 < z <= 100, with derivatives from the recurrence and Bessel's equation.
    """
    nu = float(nu)
    if abs(nu) > BESSEL_MAX_ORDER:
        raise RegionError(f"Bessel order {nu} exceeds {BESSEL_MAX_ORDER}")
    if nu < 0 and _is_integer(nu):
        return (-1) ** int(round(-nu)) * bessel_j(-nu, z)
    zv = value(z)
    if abs(zv) <= BESSEL_SERIES_MAX_ARG:
        return _bessel_j_series(nu, z)
    if abs(zv.imag) > 1e-13 or zv.real <= 0 or zv.real > BESSEL_MAX_ARG:
        raise RegionError(f"J_{nu} argument {zv} outside the supported region")
    x = zv.real
    f0 = _bessel_j_integral(nu, x)
    if not isinstance(z, Jet):
        return f0
    f1 = 0.5 * (_bessel_j_integral(nu - 1.0, x) - _bessel_j_integral(nu + 1.0, x))
    f2 = -f1 / x - (1.0 - nu * nu / (x * x)) * f0
    return z.chain(f0, f1, f2)


def bessel_y_integer(n, z):
    """Bessel Y_n for integer n >= 0 and |z| <= 12 (Neumann series). Jet-aware."""
    if not _is_integer(n):
        raise RegionError(f"integer order required, got {n}")
    n = int(round(n))
    if n < 0:
        return (-1) ** (-n) * bessel_y_integer(-n, z)
    if abs(value(z)) > BESSEL_SERIES_MAX_ARG:
        raise RegionError(f"Y_{n} series limited to |z| <= {BESSEL_SERIES_MAX_ARG}")
    half = z / 2
    quarter = z * z / 4
    finite = 0.0
    if n > 0:
        power = 1.0
        for k in range(n):
            finite = finite + math.factorial(n - k - 1) / math.factorial(k) * power
            power = power * quarter
        finite = finite * half ** (-n)

    def digamma_int(m):
        return -EULER_GAMMA + sum(1.0 / j for j in range(1, m))

    coef = 1.0 / math.factorial(n)
    power = 1.0
    tail = 0.0
    for k in range(MAX_TERMS):
        term = coef * (digamma_int(k + 1) + digamma_int(n + k + 1)) * power
        tail = tail + term
        if k > 2 and _converged(term, tail):
            break
        coef = coef / ((k + 1) * (n + k + 1))
        power = power * (-quarter)
    else:
        raise RegionError(f"Y_{n} series did not converge at z={value(z)}")
    tail = tail * half ** n
    return (2.0 / math.pi) * jets.log(half) * _bessel_j_series(float(n), z) - finite / math.pi - tail / math.pi


def _hankel_half_nonneg(n, z):
    total = 0.0
    inv = 1.0 / (2 * z)
    power = 1.0
    for k in range(n + 1):
        coef = (1j ** k) * math.factorial(n + k) / (math.factorial(k) * math.factorial(n - k))
        total = total + coef * power
        power = power * inv
    return jets.sqrt(2.0 / (math.pi * z)) * (-1j) ** (n + 1) * jets.exp(1j * z) * total


def hankel1_half_integer(nu, z):
    """Hankel H^(1)_nu for half-integer nu, closed form (exact to roundoff). Jet-aware."""
    n_float = complex(nu).real - 0.5
    n = round(n_float)
    if abs(n_float - n) > 1e-12 or abs(complex(nu).imag) > 0:
        raise RegionError(f"half-integer order required, got {nu}")
    if n >= 0:
        return _hankel_half_nonneg(n, z)
    mu = -complex(nu).real
    return cmath.exp(1j * math.pi * mu) * _hankel_half_nonneg(-n - 1, z)


def hankel1_integer(n, z):
    """Hankel H^(1)_n = J_n + i Y_n for integer n and |z| <= 12. Jet-aware."""
    return bessel_j(float(round(n)), z) + 1j * bessel_y_integer(n, z)


def _k_integral(x, order, imaginary, power):
    upper = math.acosh(max(60.0 / x, 1.0)) + 1.0
    if imaginary:
        def integrand(t):
            return math.exp(-x * math.cosh(t)) * math.cosh(t) ** power * math.cos(order * t)
    else:
        def integrand(t):
            return math.exp(-x * math.cosh(t)) * math.cosh(t) ** power * math.cosh(order * t)
    result, _ = integrate.quad(integrand, 0.0, upper, limit=400, epsabs=1e-15, epsrel=1e-13)
    return result


def bessel_k_imag(k, x):
    """K_{ik}(x) = int_0^inf exp(-x cosh t) cos(kt) dt for x >= 0.1, |k| <= 10. Jet-aware."""
    xv = real_value(x)
    if xv < 0.1 or abs(k) > 10:
        raise RegionError(f"K_(ik) supported for x >= 0.1 and |k| <= 10, got x={xv}, k={k}")
    f0 = _k_integral(xv, k, True, 0)
    if not isinstance(x, Jet):
        return f0
    return x.chain(f0, -_k_integral(xv, k, True, 1), _k_integral(xv, k, True, 2))


def bessel_k_real(nu, x):
    """K_nu(x) for real order and x > 0 by the same cosine-transform quadrature. Jet-aware."""
    xv = real_value(x)
    if xv <= 0.05:
        raise RegionError(f"K_nu supported for x > 0.05, got {xv}")
    f0 = _k_integral(xv, nu, False, 0)
    if not isinstance(x, Jet):
        return f0
    return x.chain(f0, -_k_integral(xv, nu, False, 1), _k_integral(xv, nu, False, 2))


def bessel_i(nu, z):
    """Modified Bessel I_nu for real order and |z| <= 50 (series). Jet-aware."""
    nu = float(nu)
    if abs(value(z)) > 50.0:
        raise RegionError("I_nu series limited to |z| <= 50")
    if nu < 0 and _is_integer(nu):
        nu = -nu
    term = rgamma(nu + 1.0)
    q = z * z / 4
    total = term
    for m in range(1, MAX_TERMS):
        term = term * q / (m * (m + nu))
        total = total + term
        if m > 2 and _converged(term, total):
            return _power_half(z, nu) * total
    raise RegionError(f"I_{nu} series did not converge")


_BESSEL_KINDS = {
    "J_real_order": bessel_j,
    "H1_half_integer": hankel1_half_integer,
    "H1_integer_order": hankel1_integer,
    "K_imag_order": bessel_k_imag,
    "K_real_order": bessel_k_real,
    "I_real_order": bessel_i,
}


def bessel_eval(kind, order, arg):
    """Dispatch to one of the Bessel families by name."""
    try:
        fn = _BESSEL_KINDS[kind]
    except KeyError:
        raise DomainError(f"unknown Bessel kind '{kind}'; expected one of {sorted(_BESSEL_KINDS)}")
    return fn(order, arg)


# ---------------------------------------------------------------------------
# Airy


def _airy_maclaurin(t):
    t3 = t * t * t
    f_term, g_term = 1.0, t
    f_sum, g_sum = 1.0, t
    for k in range(MAX_TERMS):
        f_term = f_term * t3 / ((3 * k + 2) * (3 * k + 3))
        g_term = g_term * t3 / ((3 * k + 3) * (3 * k + 4))
        f_sum = f_sum + f_term
        g_sum = g_sum + g_term
        if k > 2 and _converged(f_term, f_sum) and _converged(g_term, g_sum):
            return AIRY_C1 * f_sum - AIRY_C2 * g_sum
    raise RegionError("Airy Maclaurin series did not converge")


def _airy_oscillatory(t):
    x = -t
    zeta = (2.0 / 3.0) * x ** 1.5
    zv = abs(value(zeta))
    p_sum, q_sum = 0.0, 0.0
    u = 1.0
    inv = 1.0 / zeta
    power = 1.0
    previous = math.inf
    for j in range(200):
        size = u / zv ** j
        if size > previous or size < SERIES_EPS:
            break
        previous = size
        sign = -1.0 if (j // 2) % 2 else 1.0
        if j % 2 == 0:
            p_sum = p_sum + sign * u * power
        else:
            q_sum = q_sum + sign * u * power
        power = power * inv
        k = j + 1
        u = u * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * k * (2 * k - 1))
    phase = zeta + math.pi / 4
    return x ** (-0.25) / math.sqrt(math.pi) * (jets.sin(phase) * p_sum - jets.cos(phase) * q_sum)


def _airy_decaying(t):
    tv = real_value(t)
    zeta = (2.0 / 3.0) * tv ** 1.5
    ai = math.sqrt(tv / 3.0) / math.pi * _k_integral(zeta, 1.0 / 3.0, False, 0)
    if not isinstance(t, Jet):
        return ai
    aip = -tv / (math.pi * math.sqrt(3.0)) * _k_integral(zeta, 2.0 / 3.0, False, 0)
    return t.chain(ai, aip, tv * ai)


def airy_ai(t):
    """
    Airy function Ai(t) for |t| <= 20. Jet-aware; real scalars return float.

    Maclaurin series on [-7, 2], K_{1/3} quadrature above 2, oscillatory
    asymptotic expansion below -7.
    """
    tv = real_value(t)
    if abs(tv) > 20.0:
        raise RegionError(f"airy_ai supported for |t| <= 20, got {tv}")
    if tv > 2.0:
        out = _airy_decaying(t)
    elif tv < -7.0:
        out = _airy_oscillatory(t)
    else:
        out = _airy_maclaurin(t)
    if isinstance(out, Jet):
        return out
    return complex(out).real


# ---------------------------------------------------------------------------
# Jacobi elliptic functions


def _agm_sequences(k):
    a = [1.0]
    b = math.sqrt(1.0 - k * k)
    c = [k]
    while abs(c[-1]) > 1e-16 and len(a) < 64:
        a_next = 0.5 * (a[-1] + b)
        c.append(0.5 * (a[-1] - b))
        b = math.sqrt(a[-1] * b)
        a.append(a_next)
    return a, c


def _check_modulus(k):
    if not 0.0 < k < 1.0:
        raise DomainError(f"elliptic modulus must lie in (0, 1), got {k}")


def elliptic_k(k):
    """Complete elliptic integral of the first kind K(k) via the AGM."""
    _check_modulus(k)
    a, _ = _agm_sequences(k)
    return math.pi / (2.0 * a[-1])


def jacobi_elliptic(u, k):
    """(sn, cn, dn)(u, k) by the descending Landen / AGM scheme. Jet-aware in ``u``."""
    _check_modulus(k)
    uv = real_value(u)
    a, c = _agm_sequences(k)
    steps = len(a) - 1
    phi = 2 ** steps * a[-1] * uv
    for n in range(steps, 0, -1):
        phi = 0.5 * (phi + math.asin(c[n] * math.sin(phi) / a[n]))
    sn, cn = math.sin(phi), math.cos(phi)
    dn = math.sqrt(1.0 - k * k * sn * sn)
    if not isinstance(u, Jet):
        return sn, cn, dn
    k2 = k * k
    return (
        u.chain(sn, cn * dn, -sn * (dn * dn + k2 * cn * cn)),
        u.chain(cn, -sn * dn, -cn * (dn * dn - k2 * sn * sn)),
        u.chain(dn, -k2 * sn * cn, -k2 * dn * (cn * cn - sn * sn)),
    )


# ---------------------------------------------------------------------------
# Theta function


def theta3(v, tau, extra_terms=0):
    """
    Theta_3(v | tau) = sum_n exp(i pi tau n^2 + 2 i n v), Im tau > 0. Jet-aware in ``v``.

    Summed as 1 + 2 sum_{n>=1} q^{n^2} cos(2nv) until the tail bound (including
    derivative factors) drops below 1e-17; ``extra_terms`` adds terms beyond it.
    """
    tau = complex(tau)
    if tau.imag <= 0:
        raise DomainError(f"theta3 needs Im(tau) > 0, got {tau}")
    im_v = abs(value(v).imag)
    total = 1.0
    remaining = None
    for n in range(1, 100000):
        q = cmath.exp(1j * math.pi * tau * n * n)
        total = total + 2.0 * q * jets.cos(2 * n * v)
        if remaining is not None:
            remaining -= 1
            if remaining <= 0:
                return total
            continue
        bound = 2.0 * abs(q) * math.exp(2 * n * im_v) * (1.0 + 4.0 * n * n)
        if bound < SERIES_EPS * max(1.0, magnitude(total)):
            if extra_terms <= 0:
                return total
            remaining = extra_terms
    raise RegionError(f"theta3 series not convergent for tau={tau}")

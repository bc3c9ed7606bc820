"""
Registry of the 21 separable coordinate systems on the complex 3-sphere.

Each ``Chart`` bundles the embedding map into C^4, the closed-form metric
(diagonal entries, sqrt(g) and the Gamma factors), the coordinate domain,
a sampling box and the corrections applied to the printed formulas. All
formula callables are written with plain operators and the ``jets``
elementary functions, so they accept floats, complex numbers or ``Jet``s.
"""

import math
from collections import namedtuple
from dataclasses import dataclass, field

from sphere3c.errors import CapabilityError, DomainError
from sphere3c.jets import cos, cosh, exp, sin, sinh, sqrt, tanh
from sphere3c.specfun import elliptic_k, jacobi_elliptic

EMBEDDING = "embedding"
METRIC_CLOSED_FORM = "metric_closed_form"
GAMMA_CLOSED_FORM = "gamma_closed_form"
EIGENBASIS = "eigenbasis"
CONSTRAINT_IDENTITY_ONLY = "constraint_identity_only"

SAMPLE_MARGIN = 0.05
TWO_PI = 2.0 * math.pi
INF = math.inf

Interval = namedtuple("Interval", ["lo", "hi", "periodic"], defaults=[False])

SPHERE = "sphere S3"
COMPLEX_ONLY = "complex only"
HYPERBOLOID = "hyperboloid-type quadric (sum z^2 = -1 convention)"
MIXED = "mixed"


@dataclass(frozen=True)
class Chart:
    system_id: int
    name: str
    coordinates: tuple
    complexification: str
    subsystem: str
    real_section: str
    capabilities: frozenset
    domain_fn: object
    box_fn: object
    metric_fn: object
    embed_fn: object = None
    identity_fn: object = None
    reject_fn: object = None
    det_sign: int = 1
    defaults: dict = field(default_factory=dict)
    errata: tuple = ()

    def has(self, capability):
        return capability in self.capabilities

    def require(self, capability):
        if capability not in self.capabilities:
            raise CapabilityError(f"system {self.system_id} ({self.name}) lacks capability '{capability}'")

    def resolve_params(self, params=None):
        """Defaults merged with ``params``, validated."""
        merged = dict(self.defaults)
        if params:
            merged.update({k: v for k, v in params.items() if v is not None})
        if "k2" in merged and not 0.0 < merged["k2"] < 1.0:
            raise DomainError(f"elliptic modulus k^2 must lie in (0, 1), got {merged['k2']}")
        if self.system_id == 17 and not merged["a"] > merged["b"] > 1.0:
            raise DomainError(f"system 17 needs a > b > 1, got a={merged['a']}, b={merged['b']}")
        if self.system_id == 18 and not merged["a"] > 1.0:
            raise DomainError(f"system 18 needs a > 1, got a={merged['a']}")
        return merged

    def domain(self, params=None):
        return self.domain_fn(self.resolve_params(params))

    def sample_box(self, params=None):
        return self.box_fn(self.resolve_params(params))

    def check_domain(self, u, params=None):
        """Raise DomainError unless ``u`` lies inside the open chart domain."""
        if len(u) != 3:
            raise DomainError(f"system {self.system_id} takes 3 coordinates, got {len(u)}")
        for name, value, interval in zip(self.coordinates, u, self.domain(params)):
            value = float(value)
            if interval.periodic:
                ok = interval.lo <= value < interval.hi
            else:
                ok = interval.lo < value < interval.hi
            if not ok or math.isnan(value):
                raise DomainError(
                    f"system {self.system_id}: {name}={value} outside ({interval.lo}, {interval.hi})")

    def is_degenerate(self, u):
        return bool(self.reject_fn and self.reject_fn(u))

    def to_json(self, params=None):
        resolved = self.resolve_params(params)
        return {
            "system_id": self.system_id,
            "name": self.name,
            "coordinates": list(self.coordinates),
            "domains": [[iv.lo, iv.hi, "periodic" if iv.periodic else "open"]
                        for iv in self.domain_fn(resolved)],
            "capabilities": sorted(self.capabilities),
            "complexification": self.complexification,
            "subsystem": self.subsystem,
            "real_section": self.real_section,
            "det_sign": self.det_sign,
            "params": resolved,
            "errata_notes": list(self.errata),
        }


def _box(*intervals):
    return lambda params: tuple(intervals)


def _cot(u):
    return cos(u) / sin(u)


def _moduli(params):
    k2 = params["k2"]
    return math.sqrt(k2), math.sqrt(1.0 - k2)


# ---------------------------------------------------------------------------
# Horicyclic family: z = (1/2[A + (1-Q)B], r1 B, r2 B, i/2[A - (1+Q)B])
# with A = e^{-ix}, B = e^{ix}, Q = r.r; induces dx^2 + e^{2ix} dr.dr


def _horicyclic(x, r1, r2):
    a, b = exp(-1j * x), exp(1j * x)
    q = r1 * r1 + r2 * r2
    return (0.5 * (a + (1.0 - q) * b), r1 * b, r2 * b, 0.5j * (a - (1.0 + q) * b))


# System 1: cylindrical

def _embed_1(theta, phi1, phi2, params):
    return (sin(theta) * cos(phi1), sin(theta) * sin(phi1), cos(theta) * cos(phi2), cos(theta) * sin(phi2))


def _metric_1(theta, phi1, phi2, params):
    s, c = sin(theta), cos(theta)
    return (1.0, s * s, c * c), s * c, (c / s - s / c, 0.0, 0.0)


# System 2: horicyclic

def _embed_2(x, y, z, params):
    return _horicyclic(x, y, z)


def _metric_2(x, y, z, params):
    b2 = exp(2j * x)
    return (1.0, b2, b2), b2, (2j, 0.0, 0.0)


# System 3: spherical

def _embed_3(chi, theta, phi, params):
    s = sin(chi)
    return (s * cos(theta), s * sin(theta) * cos(phi), s * sin(theta) * sin(phi), cos(chi))


def _metric_3(chi, theta, phi, params):
    s2 = sin(chi) ** 2
    st = sin(theta)
    return (1.0, s2, s2 * st * st), s2 * st, (2.0 * _cot(chi), _cot(theta), 0.0)


# System 4: horospherical

def _embed_4(chi, x, y, params):
    a, b = exp(-1j * x), exp(1j * x)
    s = sin(chi)
    return (0.5 * (a + (1.0 - y * y) * b) * s, y * b * s, -0.5j * (a - (1.0 + y * y) * b) * s, cos(chi))


def _metric_4(chi, x, y, params):
    s2 = sin(chi) ** 2
    return (1.0, s2, s2 * exp(2j * x)), s2 * exp(1j * x), (2.0 * _cot(chi), 1j, 0.0)


# System 5: horicyclic-polar

def _embed_5(x, rho, phi, params):
    return _horicyclic(x, rho * cos(phi), rho * sin(phi))


def _metric_5(x, rho, phi, params):
    b2 = exp(2j * x)
    return (1.0, b2, b2 * rho * rho), b2 * rho, (2j, 1.0 / rho, 0.0)


# System 6: sphero-elliptic

def _embed_6(chi, alpha, beta, params):
    k, kp = _moduli(params)
    sa, ca, da = jacobi_elliptic(alpha, k)
    sb, cb, db = jacobi_elliptic(beta, kp)
    s = sin(chi)
    return (s * sa * db, s * ca * cb, s * da * sb, cos(chi))


def _metric_6(chi, alpha, beta, params):
    k, kp = _moduli(params)
    sa, ca, da = jacobi_elliptic(alpha, k)
    sb, cb, db = jacobi_elliptic(beta, kp)
    w = k * k * ca * ca + kp * kp * cb * cb
    s2 = sin(chi) ** 2
    gamma = (2.0 * _cot(chi), -2.0 * k * k * sa * ca * da / w, -2.0 * kp * kp * sb * cb * db / w)
    return (1.0, s2 * w, s2 * w), s2 * w, gamma


def _domain_6(params):
    k, kp = _moduli(params)
    big_k, big_kp = elliptic_k(k), elliptic_k(kp)
    return (Interval(0.0, math.pi), Interval(-big_k, big_k), Interval(-2.0 * big_kp, 2.0 * big_kp))


def _box_6(params):
    k, kp = _moduli(params)
    big_k, big_kp = elliptic_k(k), elliptic_k(kp)
    m = SAMPLE_MARGIN
    return ((m, math.pi - m), (-big_k + m, big_k - m), (-2.0 * big_kp + m, 2.0 * big_kp - m))


# System 7: spherical-degenerate elliptic I

def _sech2_gap(t1, t2):
    return 1.0 / cosh(t1) ** 2 - 1.0 / cosh(t2) ** 2


def _embed_7(chi, t1, t2, params):
    c1, c2 = cosh(t1), cosh(t2)
    mean = 0.5 * (c2 / c1 + c1 / c2)
    s = sin(chi)
    return (s * mean, s * tanh(t1) * tanh(t2), 1j * s * (1.0 / (c1 * c2) - mean), cos(chi))


def _metric_7(chi, t1, t2, params):
    v = _sech2_gap(t1, t2)
    s2 = sin(chi) ** 2
    gamma = (2.0 * _cot(chi), -2.0 * sinh(t1) / cosh(t1) ** 3 / v, 2.0 * sinh(t2) / cosh(t2) ** 3 / v)
    return (1.0, s2 * v, -s2 * v), s2 * v, gamma


def _abs_gap(u):
    return abs(abs(u[1]) - abs(u[2])) < SAMPLE_MARGIN


# System 8: spherical-degenerate elliptic II

def _embed_8(chi, xi, eta, params):
    d = (xi * xi - eta * eta) ** 2
    p = xi * eta
    s = sin(chi)
    return (-1j * s * (d + 4.0) / (8.0 * p), s * (xi * xi + eta * eta) / (2.0 * p), s * (4.0 - d) / (8.0 * p), cos(chi))


def _metric_8(chi, xi, eta, params):
    u = 1.0 / eta ** 2 - 1.0 / xi ** 2
    s2 = sin(chi) ** 2
    gamma = (2.0 * _cot(chi), (2.0 / xi ** 3) / u, (-2.0 / eta ** 3) / u)
    return (1.0, s2 * u, -s2 * u), s2 * u, gamma


def _near_diagonal(u):
    return abs(u[1] - u[2]) < SAMPLE_MARGIN


# System 9: horicyclic-elliptic

def _embed_9(x, t1, t2, params):
    return _horicyclic(x, cosh(t1) * cosh(t2), 1j * sinh(t1) * sinh(t2))


def _metric_9(x, t1, t2, params):
    b2 = exp(2j * x)
    c = cosh(t1) ** 2 - cosh(t2) ** 2
    return (1.0, b2 * c, -b2 * c), b2 * c, None


# System 10: horicyclic-hyperbolic

def _embed_10(x, y, z, params):
    s, p = sinh(y - z), exp(y + z)
    root2 = math.sqrt(2.0)
    return _horicyclic(x, (s + p) / root2, -1j * (s - p) / root2)


def _metric_10(x, y, z, params):
    b2 = exp(2j * x)
    ey, ez = exp(2.0 * y), exp(2.0 * z)
    e = ey + ez
    return (1.0, b2 * e, -b2 * e), b2 * e, (2j, 2.0 * ey / e, 2.0 * ez / e)


# System 11: horicyclic-parabolic I

def _embed_11(x, xi, eta, params):
    return _horicyclic(x, 0.5 * (xi * xi - eta * eta), xi * eta)


def _metric_11(x, xi, eta, params):
    b2 = exp(2j * x)
    s = xi * xi + eta * eta
    return (1.0, b2 * s, b2 * s), b2 * s, (2j, 2.0 * xi / s, 2.0 * eta / s)


# System 12: horicyclic-parabolic II

def _embed_12(x, xi, eta, params):
    half_sq = 0.5 * (xi - eta) ** 2
    total = xi + eta
    return _horicyclic(x, half_sq + total, -1j * (half_sq - total))


def _metric_12(x, xi, eta, params):
    b2 = exp(2j * x)
    d = xi - eta
    return (1.0, 4.0 * b2 * d, -4.0 * b2 * d), 4.0 * b2 * d, (2j, 1.0 / d, -1.0 / d)


# System 13: elliptic-cylindrical

def _embed_13(alpha, beta, phi, params):
    k, kp = _moduli(params)
    sa, ca, da = jacobi_elliptic(alpha, k)
    sb, cb, db = jacobi_elliptic(beta, kp)
    r = sa * db
    return (r * cos(phi), r * sin(phi), ca * cb, da * sb)


def _metric_13(alpha, beta, phi, params):
    k, kp = _moduli(params)
    sa, ca, da = jacobi_elliptic(alpha, k)
    sb, cb, db = jacobi_elliptic(beta, kp)
    w = k * k * ca * ca + kp * kp * cb * cb
    gamma = (
        -2.0 * k * k * sa * ca * da / w + ca * da / sa,
        -2.0 * kp * kp * sb * cb * db / w - kp * kp * sb * cb / db,
        0.0,
    )
    return (w, w, (sa * db) ** 2), w * sa * db, gamma


def _domain_13(params):
    k, kp = _moduli(params)
    big_k, big_kp = elliptic_k(k), elliptic_k(kp)
    return (Interval(0.0, big_k), Interval(-2.0 * big_kp, 2.0 * big_kp), Interval(0.0, TWO_PI, True))


def _box_13(params):
    k, kp = _moduli(params)
    big_k, big_kp = elliptic_k(k), elliptic_k(kp)
    m = SAMPLE_MARGIN
    return ((m, big_k - m), (-2.0 * big_kp + m, 2.0 * big_kp - m), (0.0, TWO_PI))


# System 14: elliptic-parabolic

def _embed_14(t1, t2, t3, params):
    c1, c2 = cosh(t1), cosh(t2)
    mean = 0.5 * (c1 / c2 + c2 / c1)
    tt = tanh(t1) * tanh(t2)
    return (mean, tt * cosh(t3), -1j * tt * sinh(t3), -1j / (c1 * c2) + 1j * mean)


def _metric_14(t1, t2, t3, params):
    th1, th2 = tanh(t1), tanh(t2)
    t = th1 * th1 - th2 * th2
    gamma = (
        2.0 * sinh(t1) / cosh(t1) ** 3 / t + 1.0 / (sinh(t1) * cosh(t1)),
        -2.0 * sinh(t2) / cosh(t2) ** 3 / t + 1.0 / (sinh(t2) * cosh(t2)),
        0.0,
    )
    return (-t, t, -(th1 * th2) ** 2), t * th1 * th2, gamma


def _near_diagonal_first(u):
    return abs(u[0] - u[1]) < SAMPLE_MARGIN


# System 15: elliptic-hyperbolic

def _embed_15(t1, t2, t3, params):
    c1, c2 = cosh(t1), cosh(t2)
    ab = 1.0 / (c1 * c2)
    w1 = (c1 * c1 + c2 * c2) / (2.0 * c1 * c2)
    h = 0.5 * t3 * t3 * ab
    return (-w1 + h, t3 * ab, tanh(t1) * tanh(t2), 1j * (ab + h - w1))


def _metric_15(t1, t2, t3, params):
    c1, c2 = cosh(t1), cosh(t2)
    v = _sech2_gap(t1, t2)
    ab = 1.0 / (c1 * c2)
    gamma = (
        -2.0 * sinh(t1) / c1 ** 3 / v - tanh(t1),
        2.0 * sinh(t2) / c2 ** 3 / v - tanh(t2),
        0.0,
    )
    return (v, -v, ab * ab), v * ab, gamma


def _abs_gap_first(u):
    return abs(abs(u[0]) - abs(u[1])) < SAMPLE_MARGIN


# System 16: parabolic

def _embed_16(xi, eta, tau, params):
    p = xi * eta
    q = (xi * xi + eta * eta) ** 2
    shift = tau * tau / (2.0 * p)
    return (
        (q + 4.0) / (8.0 * p) + shift,
        -1j * tau / p,
        -0.5j * (xi / eta - eta / xi),
        1j * ((q - 4.0) / (8.0 * p) + shift),
    )


def _metric_16(xi, eta, tau, params):
    r = 1.0 / xi ** 2 + 1.0 / eta ** 2
    p = xi * eta
    gamma = ((-2.0 / xi ** 3) / r - 1.0 / xi, (-2.0 / eta ** 3) / r - 1.0 / eta, 0.0)
    return (-r, -r, -1.0 / (p * p)), r / p, gamma


# Systems 17-21: ellipsoidal-type, ds^2 = sum (rho_i - rho_j)(rho_i - rho_k)/f(rho_i) drho_i^2

def _ellipsoidal_metric(f):
    def metric(r1, r2, r3, params):
        rho = (r1, r2, r3)
        diag = []
        for i in range(3):
            j, k = [m for m in range(3) if m != i]
            diag.append((rho[i] - rho[j]) * (rho[i] - rho[k]) / f(rho[i], params))
        return tuple(diag), sqrt(diag[0] * diag[1] * diag[2]), None
    return metric


def _f_17(r, params):
    a, b = params["a"], params["b"]
    return -4.0 * (r - a) * (r - b) * (r - 1.0) * r


def _f_18(r, params):
    # printed without the chart parameter a
    return -4.0 * (r - 2.0) * (r - 1.0) * r * r


def _f_19(r, params):
    return -4.0 * (r - 1.0) ** 2 * r * r


def _f_20(r, params):
    return -4.0 * (r - 1.0) * r ** 3


def _f_21(r, params):
    return -4.0 * r ** 4


def _symmetric(r1, r2, r3):
    return r1 + r2 + r3, r1 * r2 + r1 * r3 + r2 * r3, r1 * r2 * r3


def squares_17(r1, r2, r3, params):
    """z_i^2 of the ellipsoidal chart (sign-corrected so that they sum to 1)."""
    a, b = params["a"], params["b"]

    def prod(c):
        return (r1 - c) * (r2 - c) * (r3 - c)

    return (
        r1 * r2 * r3 / (a * b),
        -prod(1) / ((a - 1) * (b - 1)),
        prod(b) / ((a - b) * (b - 1) * b),
        -prod(a) / ((a - b) * (a - 1) * a),
    )


def _embed_17(r1, r2, r3, params):
    return tuple(sqrt(sq) for sq in squares_17(r1, r2, r3, params))


def _identity_17(r1, r2, r3, params):
    sq = squares_17(r1, r2, r3, params)
    return {"z1^2": sq[0], "z2^2": sq[1], "z3^2": sq[2], "z4^2": sq[3]}, sum(sq) - 1


def _identity_18(r1, r2, r3, params):
    a = params["a"]
    _, e2, e3 = _symmetric(r1, r2, r3)
    parts = {
        "z1^2+z2^2": -((a + 1) * e3 - a * e2) / (a * a),
        "z3^2": -(r1 - 1) * (r2 - 1) * (r3 - 1) / (1 - a),
        "z4^2": -(r1 - a) * (r2 - a) * (r3 - a) / (a * a * (a - 1)),
    }
    return parts, sum(parts.values()) - 1


def _identity_19(r1, r2, r3, params):
    _, e2, e3 = _symmetric(r1, r2, r3)
    parts = {"z1^2+z2^2": 2 * e3 - e2 + 1, "z3^2+z4^2": e2 - 2 * e3}
    return parts, sum(parts.values()) - 1


def _identity_20(r1, r2, r3, params):
    e1, e2, e3 = _symmetric(r1, r2, r3)
    parts = {"z1^2+z2^2+z3^2": e3 - e2 + e1, "z4^2": -(r1 - 1) * (r2 - 1) * (r3 - 1)}
    return parts, sum(parts.values()) - 1


def _identity_21(r1, r2, r3, params):
    # u = z1 + i z2, s = z3 + i z4, t = z3 - i z4 from the three printed relations;
    # w = z1 - i z2 closes the system through u w + s t = 1
    e1, e2, e3 = _symmetric(r1, r2, r3)
    u = sqrt(2 * e3)
    if u == 0:
        raise DomainError("system 21 identity needs rho1 rho2 rho3 != 0")
    s = -e2 / u
    t = (s * s / 2 - e1) / u
    w = (1 - s * t) / u
    z1, z2 = (u + w) / 2, (u - w) / 2j
    z3, z4 = (s + t) / 2, (s - t) / 2j
    residuals = (
        (z1 + 1j * z2) ** 2 - 2 * e3,
        (z1 + 1j * z2) * (z3 + 1j * z4) + e2,
        -(z1 + 1j * z2) * (z3 - 1j * z4) + (z3 + 1j * z4) ** 2 / 2 - e1,
    )
    parts = {"z": (z1, z2, z3, z4), "relation_residuals": residuals}
    total = z1 * z1 + z2 * z2 + z3 * z3 + z4 * z4 - 1
    worst = max([abs(total)] + [abs(r) for r in residuals])
    return parts, worst


def _ordered(*intervals):
    return lambda params: tuple(Interval(lo(params), hi(params)) for lo, hi in intervals)


def _const(v):
    return lambda params: v


def _param(name, offset=0.0):
    return lambda params: params[name] + offset


def _shrink(domain_fn):
    def box(params):
        return tuple((iv.lo + SAMPLE_MARGIN, iv.hi - SAMPLE_MARGIN) for iv in domain_fn(params))
    return box


_DOMAIN_17 = _ordered((_const(0.0), _const(1.0)), (_const(1.0), _param("b")), (_param("b"), _param("a")))
_DOMAIN_18 = _ordered((_const(0.0), _const(1.0)), (_const(1.0), _param("a")), (_param("a"), _param("a", 1.0)))
_DOMAIN_19 = _ordered((_const(-1.0), _const(0.0)), (_const(0.0), _const(1.0)), (_const(1.0), _const(2.0)))
_DOMAIN_21 = _ordered((_const(-2.0), _const(0.0)), (_const(0.0), _const(1.0)), (_const(1.0), _const(2.0)))

_HORICYCLIC_NOTE = ("adopted (z2, z3) = r e^{ix}: the printed i r e^{ix} variant satisfies sum z^2 = 1 "
                    "but induces dx^2 - e^{2ix} dr.dr, contradicting the printed ds^2")
_X = Interval(-INF, INF)
_X_BOX = (-1.5, 1.5)
_ANGLE = Interval(0.0, math.pi)
_ANGLE_BOX = (SAMPLE_MARGIN, math.pi - SAMPLE_MARGIN)
_PERIODIC = Interval(0.0, TWO_PI, True)

_ALL_GEOMETRY = frozenset({EMBEDDING, METRIC_CLOSED_FORM, GAMMA_CLOSED_FORM})
_WITH_EIGENBASIS = _ALL_GEOMETRY | {EIGENBASIS}
_ALGEBRAIC = frozenset({METRIC_CLOSED_FORM, CONSTRAINT_IDENTITY_ONLY})
_ELLIPSOIDAL_NOTE = "sqrt(g) is the principal square root of det g; Gamma from (1/2) d ln det g"


CHARTS = {chart.system_id: chart for chart in (
    Chart(1, "Cylindrical", ("theta", "phi1", "phi2"), "S3, Lambda3, O(2,2)", "S(2,R) polar", SPHERE,
          _WITH_EIGENBASIS, _box(Interval(0.0, math.pi / 2), _PERIODIC, _PERIODIC),
          _box((SAMPLE_MARGIN, math.pi / 2 - SAMPLE_MARGIN), (0.0, TWO_PI), (0.0, TWO_PI)),
          _metric_1, _embed_1),
    Chart(2, "Horicyclic", ("x", "y", "z"), "Lambda3, O(2,2)", "E(2,R) Cartesian", COMPLEX_ONLY,
          _WITH_EIGENBASIS, _box(_X, _X, _X), _box(_X_BOX, (-2.0, 2.0), (-2.0, 2.0)),
          _metric_2, _embed_2,
          errata=(_HORICYCLIC_NOTE,
                  "z4 = (i/2)[e^{-ix} - (1 + y^2 + z^2) e^{ix}] restores sum z^2 = 1",
                  "Hankel order of the x-block is J+1, not the printed J+1/2")),
    Chart(3, "Spherical", ("chi", "theta", "phi"), "S3, Lambda3, O(2,2)", "S(2,R) polar", SPHERE,
          _WITH_EIGENBASIS, _box(_ANGLE, _ANGLE, _PERIODIC), _box(_ANGLE_BOX, _ANGLE_BOX, (0.0, TWO_PI)),
          _metric_3, _embed_3,
          errata=("eigenfunctions use e^{i m2 phi} C^{m1+1}_{J-m1}(cos chi) C^{m2+1/2}_{m1-m2}(cos theta); "
                  "the printed indices m1+2, m2+3/2 and phase e^{i m1 phi} fail the Laplacian",)),
    Chart(4, "Horospherical", ("chi", "x", "y"), "Lambda3, O(2,2)", "S(2,C) horospherical", COMPLEX_ONLY,
          _WITH_EIGENBASIS, _box(_ANGLE, _X, _X), _box(_ANGLE_BOX, _X_BOX, (-2.0, 2.0)),
          _metric_4, _embed_4),
    Chart(5, "Horicyclic-polar", ("x", "rho", "phi"), "Lambda3, O(2,2)", "E(2,R) polar", COMPLEX_ONLY,
          _WITH_EIGENBASIS, _box(_X, Interval(0.0, INF), _PERIODIC),
          _box(_X_BOX, (SAMPLE_MARGIN, 3.0), (0.0, TWO_PI)),
          _metric_5, _embed_5, errata=(_HORICYCLIC_NOTE,)),
    Chart(6, "Sphero-elliptic", ("chi", "alpha", "beta"), "S3, Lambda3, O(2,2)", "S(2,R) conical", SPHERE,
          _ALL_GEOMETRY, _domain_6, _box_6, _metric_6, _embed_6, defaults={"k2": 0.5},
          errata=("Gamma denominators are k^2 cn^2(alpha) + k'^2 cn^2(beta) with beta functions at modulus k'; "
                  "the printed cn^2 alpha + cn^2 alpha is a misprint",)),
    Chart(7, "Spherical-degenerate elliptic I", ("chi", "tau1", "tau2"), "Lambda3, O(2,2)",
          "S(2,C) degenerate elliptic I", COMPLEX_ONLY,
          _ALL_GEOMETRY, _box(_ANGLE, _X, _X), _box(_ANGLE_BOX, (-2.0, 2.0), (-2.0, 2.0)),
          _metric_7, _embed_7, reject_fn=_abs_gap, det_sign=-1,
          errata=("z3 multiplied by i to restore sum z^2 = 1 and the printed ds^2",)),
    Chart(8, "Spherical-degenerate elliptic II", ("chi", "xi", "eta"), "Lambda3, O(2,2)",
          "S(2,C) degenerate elliptic II", COMPLEX_ONLY,
          _ALL_GEOMETRY, _box(_ANGLE, Interval(0.0, INF), Interval(0.0, INF)),
          _box(_ANGLE_BOX, (0.3, 3.0), (0.3, 3.0)),
          _metric_8, _embed_8, reject_fn=_near_diagonal, det_sign=-1,
          errata=("z2 = sin chi (xi^2 + eta^2)/(2 xi eta) without the printed square",
                  "z4 = cos chi",
                  "Gamma_xi, Gamma_eta signs follow d ln sqrt(g); the printed signs are reversed")),
    Chart(9, "Horicyclic-elliptic", ("x", "tau1", "tau2"), "Lambda3, O(2,2)", "E(2,R) elliptic", COMPLEX_ONLY,
          frozenset({EMBEDDING, METRIC_CLOSED_FORM}), _box(_X, _X, _X), _box(_X_BOX, (-2.0, 2.0), (-2.0, 2.0)),
          _metric_9, _embed_9, reject_fn=_abs_gap, det_sign=-1,
          errata=(_HORICYCLIC_NOTE,
                  "printed Gamma has the zero denominator cosh^2 tau2 - cosh^2 tau2; Gamma taken from d ln sqrt(g)",
                  "printed dx in ds^2 read as dx^2")),
    Chart(10, "Horicyclic-hyperbolic", ("x", "y", "z"), "O(2,2)", "E(2,C) hyperbolic", COMPLEX_ONLY,
          _ALL_GEOMETRY, _box(_X, _X, _X), _box(_X_BOX, (-1.5, 1.5), (-1.5, 1.5)),
          _metric_10, _embed_10, det_sign=-1,
          errata=(_HORICYCLIC_NOTE,
                  "duplicated trailing e^{ix} on z4 dropped",
                  "Gamma_z = +2 e^{2z}/(e^{2y} + e^{2z}); the printed sign is wrong")),
    Chart(11, "Horicyclic-parabolic I", ("x", "xi", "eta"), "Lambda3, O(2,2)", "E(2,R) parabolic", COMPLEX_ONLY,
          _ALL_GEOMETRY, _box(_X, _X, Interval(0.0, INF)), _box(_X_BOX, (-2.0, 2.0), (SAMPLE_MARGIN, 2.0)),
          _metric_11, _embed_11, errata=(_HORICYCLIC_NOTE,)),
    Chart(12, "Horicyclic-parabolic II", ("x", "xi", "eta"), "O(2,2)", "E(2,C) semi-parabolic", COMPLEX_ONLY,
          _ALL_GEOMETRY, _box(_X, _X, _X), _box(_X_BOX, (-2.0, 2.0), (-2.0, 2.0)),
          _metric_12, _embed_12, reject_fn=_near_diagonal, det_sign=-1,
          errata=(_HORICYCLIC_NOTE, "z4 carries the factor i missing from the printed chart")),
    Chart(13, "Elliptic-Cylindrical", ("alpha", "beta", "phi"), "S3, Lambda3, O(2,2)", "-", MIXED,
          _ALL_GEOMETRY, _domain_13, _box_13, _metric_13, _embed_13, defaults={"k2": 0.5},
          errata=("adopted chart (sn dn cos phi, sn dn sin phi, cn cn, dn sn) matching the printed Gamma; "
                  "the printed complex chart does not induce the printed ds^2",
                  "assumed ranges alpha in (0, K), beta in (-2K', 2K'), phi in [0, 2 pi)")),
    Chart(14, "Elliptic-Parabolic", ("tau1", "tau2", "tau3"), "Lambda3, O(2,2)", "-", HYPERBOLOID,
          _ALL_GEOMETRY, _box(Interval(0.0, INF), Interval(0.0, INF), _X),
          _box((SAMPLE_MARGIN, 2.0), (SAMPLE_MARGIN, 2.0), (-2.0, 2.0)),
          _metric_14, _embed_14, reject_fn=_near_diagonal_first,
          errata=("induced metric is -1 times the printed ds^2 (sign-reversed quadric convention)",
                  "Gamma term 1/cosh^2 tau corrected to 1/(sinh tau cosh tau)")),
    Chart(15, "Elliptic-Hyperbolic", ("tau1", "tau2", "tau3"), "Lambda3, O(2,2)", "-", MIXED,
          _ALL_GEOMETRY, _box(_X, _X, _X), _box((-2.0, 2.0), (-2.0, 2.0), (-2.0, 2.0)),
          _metric_15, _embed_15, reject_fn=_abs_gap_first, det_sign=-1,
          errata=("tau3 Wick-rotated (z2 = tau3/(cosh tau1 cosh tau2), tau3^2 sign flipped in z1, z4) "
                  "to reproduce +sech^2 tau1 sech^2 tau2 dtau3^2",)),
    Chart(16, "Parabolic", ("xi", "eta", "tau"), "O(2,2)", "-", HYPERBOLOID,
          _WITH_EIGENBASIS, _box(Interval(0.0, INF), Interval(0.0, INF), _X),
          _box((0.3, 3.0), (0.3, 3.0), (-2.0, 2.0)),
          _metric_16, _embed_16, det_sign=-1,
          errata=("induced metric is -1 times the printed ds^2",
                  "Laguerre index lambda = -(J+1); the printed +(J+1) fails the Laplacian")),
    Chart(17, "Ellipsoidal", ("rho1", "rho2", "rho3"), "S3, Lambda3, O(2,2)", "-", MIXED,
          frozenset({EMBEDDING, METRIC_CLOSED_FORM}), _DOMAIN_17, _shrink(_DOMAIN_17),
          _ellipsoidal_metric(_f_17), _embed_17, identity_fn=_identity_17, defaults={"a": 3.0, "b": 2.0},
          errata=("printed squares sum to -1 identically; all four negated",
                  "embedding takes principal square roots", _ELLIPSOIDAL_NOTE)),
    Chart(18, "System 18", ("rho1", "rho2", "rho3"), "Lambda3, O(2,2)", "-", MIXED,
          _ALGEBRAIC, _DOMAIN_18, _shrink(_DOMAIN_18), _ellipsoidal_metric(_f_18),
          identity_fn=_identity_18, defaults={"a": 2.0},
          errata=("printed right-hand sides sum to -1; negated",
                  "printed f(rho) = -4(rho-2)(rho-1)rho^2 omits the parameter a; used verbatim",
                  _ELLIPSOIDAL_NOTE)),
    Chart(19, "System 19", ("rho1", "rho2", "rho3"), "O(2,2)", "-", MIXED,
          _ALGEBRAIC, _DOMAIN_19, _shrink(_DOMAIN_19), _ellipsoidal_metric(_f_19),
          identity_fn=_identity_19, errata=(_ELLIPSOIDAL_NOTE,)),
    Chart(20, "System 20", ("rho1", "rho2", "rho3"), "Lambda3, O(2,2)", "-", MIXED,
          _ALGEBRAIC, _DOMAIN_19, _shrink(_DOMAIN_19), _ellipsoidal_metric(_f_20),
          identity_fn=_identity_20,
          errata=("first defining line (z2 - i z1)^2 z1^2 + z2^2 + z3^2 is garbled; "
                  "identity uses z1^2 + z2^2 + z3^2 and z4^2 only", _ELLIPSOIDAL_NOTE)),
    Chart(21, "System 21", ("rho1", "rho2", "rho3"), "O(2,2)", "-", MIXED,
          _ALGEBRAIC, _DOMAIN_21, _shrink(_DOMAIN_21), _ellipsoidal_metric(_f_21),
          identity_fn=_identity_21,
          errata=("z1 - i z2 is not fixed by the printed relations; closed by sum z^2 = 1",
                  _ELLIPSOIDAL_NOTE)),
)}


def get_chart(system_id):
    """Chart for ``system_id``; DomainError for anything outside 1-21."""
    try:
        return CHARTS[int(system_id)]
    except (KeyError, ValueError, TypeError):
        raise DomainError(f"unknown system {system_id}")


def registry_json(params=None):
    return [CHARTS[sid].to_json(params) for sid in sorted(CHARTS)]

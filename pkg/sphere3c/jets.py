"""
Second-order dual numbers.

A ``Jet`` carries the value, gradient and Hessian of a scalar with respect to
a fixed set of seed variables. Arithmetic and the elementary functions below
propagate all three exactly (to roundoff), so a function written with plain
operators returns its own first and second derivatives when fed jets.
"""

import cmath

import numpy as np


class Jet:
    """Truncated second-order Taylor scalar in ``n`` variables."""

    __slots__ = ("val", "grad", "hess")

    # numpy scalars must defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, val, grad, hess):
        self.val = complex(val)
        self.grad = np.asarray(grad, dtype=complex)
        self.hess = np.asarray(hess, dtype=complex)

    @classmethod
    def variable(cls, value, index, n):
        grad = np.zeros(n, dtype=complex)
        grad[index] = 1.0
        return cls(value, grad, np.zeros((n, n), dtype=complex))

    @classmethod
    def constant(cls, value, n):
        return cls(value, np.zeros(n, dtype=complex), np.zeros((n, n), dtype=complex))

    @property
    def n(self):
        return self.grad.shape[0]

    def __repr__(self):
        return f"Jet({self.val!r}, grad={self.grad!r})"

    def chain(self, f0, f1, f2):
        """Compose with a scalar function given its value and first two derivatives here."""
        g = self.grad
        return Jet(f0, f1 * g, f1 * self.hess + f2 * np.outer(g, g))

    # arithmetic

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val + other.val, self.grad + other.grad, self.hess + other.hess)
        return Jet(self.val + other, self.grad, self.hess)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.val, -self.grad, -self.hess)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val - other.val, self.grad - other.grad, self.hess - other.hess)
        return Jet(self.val - other, self.grad, self.hess)

    def __rsub__(self, other):
        return Jet(other - self.val, -self.grad, -self.hess)

    def __mul__(self, other):
        if isinstance(other, Jet):
            a, b = self, other
            hess = (a.val * b.hess + b.val * a.hess
                    + np.outer(a.grad, b.grad) + np.outer(b.grad, a.grad))
            return Jet(a.val * b.val, a.val * b.grad + b.val * a.grad, hess)
        return Jet(self.val * other, self.grad * other, self.hess * other)

    __rmul__ = __mul__

    def reciprocal(self):
        v = self.val
        return self.chain(1.0 / v, -1.0 / v ** 2, 2.0 / v ** 3)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return Jet(self.val / other, self.grad / other, self.hess / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, power):
        if isinstance(power, Jet):
            return (power * self.log()).exp()
        v = self.val
        if isinstance(power, (int, np.integer)):
            p = int(power)
            if p == 0:
                return Jet.constant(1.0, self.n)
            if p == 1:
                return self
            f1 = p * v ** (p - 1)
            f2 = p * (p - 1) * v ** (p - 2) if p != 2 else 2.0
            return self.chain(v ** p, f1, f2)
        p = complex(power)
        f0 = cmath.exp(p * cmath.log(v))
        return self.chain(f0, p * f0 / v, p * (p - 1) * f0 / v ** 2)

    def __rpow__(self, base):
        return (self * cmath.log(base)).exp()

    # elementary functions

    def exp(self):
        e = cmath.exp(self.val)
        return self.chain(e, e, e)

    def log(self):
        v = self.val
        return self.chain(cmath.log(v), 1.0 / v, -1.0 / v ** 2)

    def sqrt(self):
        s = cmath.sqrt(self.val)
        return self.chain(s, 0.5 / s, -0.25 / (s * self.val))

    def sin(self):
        s, c = cmath.sin(self.val), cmath.cos(self.val)
        return self.chain(s, c, -s)

    def cos(self):
        s, c = cmath.sin(self.val), cmath.cos(self.val)
        return self.chain(c, -s, -c)

    def tan(self):
        t = cmath.tan(self.val)
        sec2 = 1.0 + t * t
        return self.chain(t, sec2, 2.0 * t * sec2)

    def sinh(self):
        s, c = cmath.sinh(self.val), cmath.cosh(self.val)
        return self.chain(s, c, s)

    def cosh(self):
        s, c = cmath.sinh(self.val), cmath.cosh(self.val)
        return self.chain(c, s, c)

    def tanh(self):
        t = cmath.tanh(self.val)
        sech2 = 1.0 - t * t
        return self.chain(t, sech2, -2.0 * t * sech2)

    def asin(self):
        v = self.val
        r = cmath.sqrt(1.0 - v * v)
        return self.chain(cmath.asin(v), 1.0 / r, v / r ** 3)


def _dispatch(name, scalar_fn):
    def fn(x):
        if isinstance(x, Jet):
            return getattr(x, name)()
        return scalar_fn(x)
    fn.__name__ = name
    return fn


exp = _dispatch("exp", cmath.exp)
log = _dispatch("log", cmath.log)
sqrt = _dispatch("sqrt", cmath.sqrt)
sin = _dispatch("sin", cmath.sin)
cos = _dispatch("cos", cmath.cos)
tan = _dispatch("tan", cmath.tan)
sinh = _dispatch("sinh", cmath.sinh)
cosh = _dispatch("cosh", cmath.cosh)
tanh = _dispatch("tanh", cmath.tanh)
asin = _dispatch("asin", cmath.asin)


def value(x):
    """Primal value of a jet or a plain scalar, as complex."""
    return x.val if isinstance(x, Jet) else complex(x)


def real_value(x, tol=1e-13):
    """Primal value required to be real; used by functions defined on the real line."""
    v = value(x)
    if abs(v.imag) > tol * max(1.0, abs(v.real)):
        raise ValueError(f"real argument required, got {v}")
    return v.real


def magnitude(x):
    """Largest modulus among value, gradient and Hessian entries."""
    if isinstance(x, Jet):
        m = abs(x.val)
        if x.grad.size:
            m = max(m, float(np.max(np.abs(x.grad))), float(np.max(np.abs(x.hess))))
        return m
    return abs(x)


def seed(point):
    """Independent jets for each coordinate of ``point``."""
    n = len(point)
    return tuple(Jet.variable(float(u), i, n) for i, u in enumerate(point))


def derivatives(fn, point):
    """Value, gradient and Hessian of ``fn`` at ``point`` via jets."""
    out = fn(*seed(point))
    n = len(point)
    if not isinstance(out, Jet):
        return complex(out), np.zeros(n, dtype=complex), np.zeros((n, n), dtype=complex)
    return out.val, out.grad, out.hess

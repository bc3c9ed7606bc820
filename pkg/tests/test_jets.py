"""
test_jets.py: second-order dual numbers

Derivatives carried by jets are compared with hand-derived closed forms and
with central finite differences.
"""

import cmath
import math

import numpy as np
import pytest

from sphere3c import jets
from sphere3c.jets import Jet


def _central_difference(fn, x, h=1e-4):
    f_plus, f0, f_minus = fn(x + h), fn(x), fn(x - h)
    return (f_plus - f_minus) / (2 * h), (f_plus - 2 * f0 + f_minus) / (h * h)


class TestArithmetic:
    """Products, quotients and powers."""

    def test_polynomial(self):
        """d/dx and d2/dx2 of x^3 - 2x."""
        x = Jet.variable(1.5, 0, 1)
        f = x ** 3 - 2 * x
        assert abs(f.val - (1.5 ** 3 - 3.0)) < 1e-14
        assert abs(f.grad[0] - (3 * 1.5 ** 2 - 2)) < 1e-13, f"gradient {f.grad[0]}"
        assert abs(f.hess[0, 0] - 6 * 1.5) < 1e-13, f"second derivative {f.hess[0, 0]}"

    def test_quotient_and_negative_power(self):
        """1/x^2 via division and via integer power agree."""
        x = Jet.variable(0.7, 0, 1)
        a = 1.0 / (x * x)
        b = x ** -2
        for u, v in ((a.val, b.val), (a.grad[0], b.grad[0]), (a.hess[0, 0], b.hess[0, 0])):
            assert abs(u - v) < 1e-12 * abs(v), f"{u} vs {v}"
        assert abs(b.hess[0, 0] - 6 / 0.7 ** 4) < 1e-10

    def test_complex_power(self):
        """x^(i k) has derivatives i k x^(i k - 1) and i k (i k - 1) x^(i k - 2)."""
        k = 0.8j
        x = Jet.variable(1.3, 0, 1)
        f = x ** k
        expected = cmath.exp(k * math.log(1.3))
        assert abs(f.val - expected) < 1e-14
        assert abs(f.grad[0] - k * expected / 1.3) < 1e-14
        assert abs(f.hess[0, 0] - k * (k - 1) * expected / 1.3 ** 2) < 1e-14

    def test_mixed_partials(self):
        """Hessian of x*y*exp(x) in two variables."""
        x, y = jets.seed((0.4, -1.2))
        f = x * y * jets.exp(x)
        e = math.exp(0.4)
        assert abs(f.grad[0] - (-1.2) * e * 1.4) < 1e-13
        assert abs(f.grad[1] - 0.4 * e) < 1e-13
        assert abs(f.hess[0, 1] - e * 1.4) < 1e-13, f"mixed partial {f.hess[0, 1]}"
        assert abs(f.hess[0, 1] - f.hess[1, 0]) == 0


class TestElementary:
    """Elementary functions against finite differences."""

    @pytest.mark.parametrize("name", ["exp", "log", "sqrt", "sin", "cos", "tan", "sinh", "cosh", "tanh", "asin"])
    def test_against_finite_differences(self, name):
        """First and second derivatives match central differences."""
        fn = getattr(jets, name)
        x0 = 0.37
        out = fn(Jet.variable(x0, 0, 1))
        d1, d2 = _central_difference(lambda t: getattr(cmath, name)(t), x0)
        assert abs(out.val - getattr(cmath, name)(x0)) < 1e-15
        assert abs(out.grad[0] - d1) < 1e-7, f"{name}' = {out.grad[0]} vs {d1}"
        assert abs(out.hess[0, 0] - d2) < 1e-5, f"{name}'' = {out.hess[0, 0]} vs {d2}"

    def test_scalars_pass_through(self):
        """Plain numbers use cmath."""
        assert jets.sin(0.5) == cmath.sin(0.5)
        assert jets.value(2.0) == 2.0 + 0j


class TestHelpers:
    """derivatives(), real_value() and chain()."""

    def test_derivatives_of_constant(self):
        """A function ignoring its inputs has zero gradient."""
        val, grad, hess = jets.derivatives(lambda a, b, c: 3.0, (0.1, 0.2, 0.3))
        assert val == 3.0
        assert not np.any(grad) and not np.any(hess)

    def test_real_value_rejects_complex(self):
        """Functions of a real variable refuse complex input."""
        with pytest.raises(ValueError):
            jets.real_value(1.0 + 0.5j)

    def test_chain_attaches_derivatives(self):
        """chain() composes an external function's value and derivatives."""
        x = Jet.variable(2.0, 0, 1) * 3
        out = x.chain(1.0, 2.0, 5.0)
        assert abs(out.grad[0] - 6.0) < 1e-15
        assert abs(out.hess[0, 0] - 45.0) < 1e-15

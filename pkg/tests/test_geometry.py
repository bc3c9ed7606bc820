"""
test_geometry.py: induced metrics, closed forms and the Laplace-Beltrami operator
"""

import math

import numpy as np
import pytest

from sphere3c import jets
from sphere3c.charts import get_chart
from sphere3c.embedding import CoordTriple, domain_sample, embed, embed_components
from sphere3c.errors import CapabilityError, DomainError
from sphere3c.geometry import (hamiltonian_residual, jacobian, laplace_beltrami_apply, metric_agreement,
                               metric_closed_form, metric_from_embedding)


class TestMetric:
    """Embedding-derived metric against the chart's closed form."""

    @pytest.mark.parametrize("system_id", range(1, 18))
    def test_agreement(self, system_id):
        """Entrywise agreement to 1e-9 and Gamma to 1e-8 on seeded samples."""
        report = metric_agreement(system_id, 8, 42, 1e-9)
        assert report.passed, f"system {system_id}: max abs err {report.max_abs_err:.2e}, notes {report.notes}"
        assert report.n_points == 8

    def test_cylindrical_values(self):
        """ds^2 = dtheta^2 + sin^2 dphi1^2 + cos^2 dphi2^2, sqrt(g) = sin cos."""
        p = CoordTriple(1, (0.4, 1.0, 2.0))
        sample = metric_from_embedding(p)
        expected = np.diag([1.0, math.sin(0.4) ** 2, math.cos(0.4) ** 2])
        assert np.max(np.abs(sample.g - expected)) < 1e-15
        assert abs(sample.sqrt_g - math.sin(0.4) * math.cos(0.4)) < 1e-15

    def test_horicyclic_closed_form(self):
        """dx^2 + e^{2ix}(dy^2 + dz^2)."""
        sample = metric_closed_form(CoordTriple(2, (0.3, 0.1, -0.2)))
        b2 = complex(math.cos(0.6), math.sin(0.6))
        assert np.max(np.abs(np.diag(sample.g) - np.array([1.0, b2, b2]))) < 1e-15

    def test_jacobian_shape(self):
        """4 components by 3 coordinates."""
        assert jacobian(CoordTriple(3, (1.0, 1.0, 1.0))).shape == (4, 3)

    def test_no_embedding(self):
        """Metric agreement needs an embedding."""
        with pytest.raises(CapabilityError):
            metric_agreement(19, 4, 42, 1e-9)

    def test_out_of_domain(self):
        """Closed form refuses points outside the chart."""
        with pytest.raises(DomainError):
            metric_closed_form(CoordTriple(3, (4.0, 1.0, 1.0)))


class TestLaplacian:
    """Delta applied through the closed-form metric."""

    @pytest.mark.parametrize("system_id", [1, 2, 3, 4, 5, 16])
    def test_embedding_components(self, system_id):
        """Each embedding component satisfies Delta z_i = -3 z_i."""
        chart = get_chart(system_id)
        for p in domain_sample(system_id, 4, 11):
            params = chart.resolve_params(p.params)
            z = embed(p)
            for i, zi in enumerate(z):
                def component(a, b, c, i=i):
                    return embed_components(chart, (a, b, c), params)[i]

                lap = laplace_beltrami_apply(system_id, component, p)
                err = abs(lap + 3.0 * zi)
                assert err < 1e-8 * max(1.0, abs(zi)), f"system {system_id} z{i + 1} at {p.u}: err {err:.2e}"

    def test_point_outside_domain(self):
        """theta beyond pi/2 in the cylindrical chart is refused."""
        with pytest.raises(DomainError):
            laplace_beltrami_apply(1, lambda a, b, c: 1.0, (2.0, 0.0, 0.0))

    def test_point_from_other_chart(self):
        """A point of system 3 cannot be fed to the system 1 operator."""
        p = domain_sample(3, 1, 42)[0]
        with pytest.raises(DomainError, match="system 3"):
            laplace_beltrami_apply(1, lambda a, b, c: 1.0, p)

    def test_constant_mode(self):
        """Constants are annihilated; the Hamiltonian residual at E = 0 vanishes."""
        points = domain_sample(3, 5, 42)
        assert hamiltonian_residual(3, lambda a, b, c: 1.0, 0.0, points) == 0.0

    def test_spherical_harmonic_degree_one(self):
        """cos(chi) has energy J(J+2)/2 = 3/2."""
        points = domain_sample(3, 5, 42)
        residual = hamiltonian_residual(3, lambda chi, theta, phi: jets.cos(chi), 1.5, points)
        assert residual < 1e-12, f"residual {residual:.2e}"

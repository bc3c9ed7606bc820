"""
Metric data of the charts: from the embedding (via jets) and from the closed forms,
plus the Laplace-Beltrami operator and Hamiltonian residuals.

Gamma_a denotes d_a ln sqrt(g) and is computed as (1/2) sum_b d_a g_bb / g_bb, which
needs no square-root branch.
"""

import logging
from dataclasses import dataclass

import numpy as np

from sphere3c import jets
from sphere3c.charts import EMBEDDING, GAMMA_CLOSED_FORM, METRIC_CLOSED_FORM, get_chart
from sphere3c.embedding import CoordTriple, domain_sample, embed_components
from sphere3c.errors import DegenerateMetricError, DomainError
from utility.reports import VerificationReport

LOGGER = logging.getLogger("verification.geometry")

OFF_DIAGONAL_TOL = 1e-12
SYMMETRY_TOL = 1e-13
GAMMA_TOL = 1e-8


@dataclass(frozen=True)
class MetricSample:
    g: np.ndarray
    sqrt_g: complex
    gamma: np.ndarray
    det_sign: int = 1


def _embedding_jets(p):
    chart = get_chart(p.system_id)
    chart.require(EMBEDDING)
    params = chart.resolve_params(p.params)
    chart.check_domain(p.u, params)
    z = embed_components(chart, jets.seed(p.u), params)
    return chart, [zi if isinstance(zi, jets.Jet) else jets.Jet.constant(zi, 3) for zi in z]


def jacobian(p):
    """4x3 matrix dz_i/du_a, exact to roundoff."""
    _, z = _embedding_jets(p)
    return np.array([zi.grad for zi in z])


def _diagonal_gamma(diag, dgrad):
    for a in range(3):
        if diag[a] == 0:
            raise DegenerateMetricError(f"metric entry g_{a}{a} vanishes")
    return np.array([0.5 * sum(dgrad[b][a] / diag[b] for b in range(3)) for a in range(3)])


def metric_from_embedding(p):
    """g_ab = sum_i dz_i/du_a dz_i/du_b (bilinear); sqrt(g) is the principal root of det_sign * det g."""
    chart, z = _embedding_jets(p)
    jac = np.array([zi.grad for zi in z])
    hess = np.array([zi.hess for zi in z])
    g = jac.T @ jac
    # dg[c, a, b] = d_c g_ab
    dg = np.einsum("iac,ib->cab", hess, jac) + np.einsum("ia,ibc->cab", jac, hess)

    scale = max(1.0, float(np.max(np.abs(g))))
    if np.max(np.abs(g - g.T)) > SYMMETRY_TOL * scale:
        raise DegenerateMetricError(f"system {p.system_id}: metric not symmetric at {p.u}")
    off = np.abs(g - np.diag(np.diag(g)))
    if np.max(off) > OFF_DIAGONAL_TOL * scale:
        raise DegenerateMetricError(
            f"system {p.system_id}: off-diagonal metric entry {np.max(off):.3e} at {p.u}")

    diag = np.diag(g)
    dgrad = [[dg[c, b, b] for c in range(3)] for b in range(3)]
    gamma = _diagonal_gamma(diag, dgrad)
    det = complex(np.prod(diag))
    sqrt_g = complex(np.sqrt(complex(chart.det_sign * det)))
    return MetricSample(g=g, sqrt_g=sqrt_g, gamma=gamma, det_sign=chart.det_sign)


def _closed_form_jets(chart, u, params):
    diag, sqrt_g, gamma = chart.metric_fn(*jets.seed(u), params)
    return diag, sqrt_g, gamma


def metric_closed_form(p):
    """The chart's closed-form ds^2, sqrt(g) and Gamma; Gamma is derived when none is printed."""
    chart = get_chart(p.system_id)
    chart.require(METRIC_CLOSED_FORM)
    params = chart.resolve_params(p.params)
    chart.check_domain(p.u, params)
    diag, sqrt_g, gamma = _closed_form_jets(chart, p.u, params)
    values = [jets.value(d) for d in diag]
    if gamma is None or not chart.has(GAMMA_CLOSED_FORM):
        grads = [d.grad if isinstance(d, jets.Jet) else np.zeros(3) for d in diag]
        gamma_values = _diagonal_gamma(values, grads)
    else:
        gamma_values = np.array([jets.value(c) for c in gamma])
    return MetricSample(g=np.diag(np.array(values, dtype=complex)), sqrt_g=jets.value(sqrt_g),
                        gamma=gamma_values, det_sign=chart.det_sign)


def metric_agreement(system_id, n, seed, tol, params=None, gamma_tol=GAMMA_TOL):
    """
    Max entrywise deviation between the embedding-derived and closed-form metric over
    ``n`` samples. Also compares Gamma where the chart has a printed one, and checks
    (sqrt g)^2 = det_sign * det g for the closed form.
    """
    chart = get_chart(system_id)
    chart.require(EMBEDDING)
    chart.require(METRIC_CLOSED_FORM)
    samples = domain_sample(system_id, n, seed, params)
    max_abs = max_rel = 0.0
    gamma_err = det_err = 0.0
    for p in samples:
        derived = metric_from_embedding(p)
        closed = metric_closed_form(p)
        diff = float(np.max(np.abs(derived.g - closed.g)))
        scale = max(1.0, float(np.max(np.abs(closed.g))))
        max_abs = max(max_abs, diff)
        max_rel = max(max_rel, diff / scale)
        det = complex(np.prod(np.diag(closed.g)))
        det_err = max(det_err, abs(closed.sqrt_g ** 2 - chart.det_sign * det) / max(1.0, abs(det)))
        if chart.has(GAMMA_CLOSED_FORM):
            g_scale = max(1.0, float(np.max(np.abs(closed.gamma))))
            gamma_err = max(gamma_err, float(np.max(np.abs(derived.gamma - closed.gamma))) / g_scale)

    notes = list(chart.errata)
    notes.append(f"det check max rel err {det_err:.3e}")
    if chart.has(GAMMA_CLOSED_FORM):
        notes.append(f"gamma max rel err {gamma_err:.3e} (tol {gamma_tol:g})")
    else:
        notes.append("gamma from d ln sqrt(g) only")
    passed = (max_abs <= tol or max_rel <= tol) and gamma_err <= gamma_tol and det_err <= 1e-10
    LOGGER.debug(f"system {system_id}: metric abs {max_abs:.3e}, gamma {gamma_err:.3e}, det {det_err:.3e}")
    return VerificationReport(
        check="metric_agreement", system=system_id, params=chart.resolve_params(params),
        n_points=n, seed=seed, max_abs_err=max_abs, max_rel_err=max_rel, tol=tol,
        passed=passed, notes=notes,
    )


def laplace_beltrami_apply(system_id, f, p):
    """
    Delta f at ``p`` for a scalar field ``f(u1, u2, u3)`` written with jet-aware operations.

    Uses Delta f = sum_a g^aa [d_a^2 f + (Gamma_a - d_a ln g_aa) d_a f] for the
    diagonal closed-form metric.
    """
    if not isinstance(p, CoordTriple):
        p = CoordTriple(system_id, p)
    if p.system_id != system_id:
        raise DomainError(f"point belongs to system {p.system_id}, not system {system_id}")
    chart = get_chart(system_id)
    chart.require(METRIC_CLOSED_FORM)
    params = chart.resolve_params(p.params)
    chart.check_domain(p.u, params)
    diag, _, _ = _closed_form_jets(chart, p.u, params)
    values = [jets.value(d) for d in diag]
    grads = [d.grad if isinstance(d, jets.Jet) else np.zeros(3, dtype=complex) for d in diag]
    if any(abs(v) == 0 for v in values):
        raise DegenerateMetricError(f"system {system_id}: singular metric at {p.u}")
    gamma = _diagonal_gamma(values, grads)
    _, df, d2f = jets.derivatives(f, p.u)
    total = 0j
    for a in range(3):
        total += (d2f[a, a] + (gamma[a] - grads[a][a] / values[a]) * df[a]) / values[a]
    return total


def hamiltonian_residual(system_id, f, energy, points):
    """max |(-1/2 Delta - E) f| / max |f| over ``points``."""
    worst = 0.0
    peak = 0.0
    for p in points:
        p = p if isinstance(p, CoordTriple) else CoordTriple(system_id, p)
        value = complex(jets.derivatives(f, p.u)[0])
        lap = laplace_beltrami_apply(system_id, f, p)
        worst = max(worst, abs(-0.5 * lap - energy * value))
        peak = max(peak, abs(value))
    if peak == 0:
        return worst
    return worst / peak

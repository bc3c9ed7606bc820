"""
Coordinate charts as maps into C^4, the defining constraint and the bilinear pairing.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from sphere3c.charts import CONSTRAINT_IDENTITY_ONLY, EMBEDDING, get_chart
from sphere3c.errors import CapabilityError, DomainError

LOGGER = logging.getLogger("verification.embedding")

ORDERING_TOL = 0.0
MAX_REJECTIONS = 1000


@dataclass(frozen=True)
class CoordTriple:
    """A coordinate point of one chart. ``params`` overrides chart parameters (k2, a, b)."""

    system_id: int
    u: tuple
    params: dict = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(float(v) for v in self.u))


@dataclass(frozen=True)
class CPoint4:
    z1: complex
    z2: complex
    z3: complex
    z4: complex

    def __iter__(self):
        return iter((self.z1, self.z2, self.z3, self.z4))

    def as_array(self):
        return np.array(tuple(self), dtype=complex)


def embed_components(chart, u, params):
    """Raw embedding components; accepts jets and skips all validation."""
    return chart.embed_fn(*u, params)


def embed(p):
    """Embedded point of ``p``; DomainError out of domain, CapabilityError for systems 18-21."""
    chart = get_chart(p.system_id)
    chart.require(EMBEDDING)
    params = chart.resolve_params(p.params)
    chart.check_domain(p.u, params)
    return CPoint4(*(complex(z) for z in embed_components(chart, p.u, params)))


def constraint_residual(q):
    """|z1^2 + z2^2 + z3^2 + z4^2 - 1| with bilinear squares, no conjugation."""
    return abs(sum(z * z for z in q) - 1.0)


def dot4(q1, q2):
    """Bilinear pairing sum z1_i z2_i, no conjugation."""
    return sum(a * b for a, b in zip(q1, q2))


def point_rng(seed, system_id, index):
    """Counter-based generator keyed by (seed, system, point index)."""
    sequence = np.random.SeedSequence(seed, spawn_key=(int(system_id), int(index)))
    return np.random.Generator(np.random.Philox(sequence))


def domain_sample(system_id, n, seed, params=None):
    """
    ``n`` interior samples of the chart, reproducible from ``seed``.

    Each point draws from its own stream, so sample i does not depend on n.
    Points inside the chart's degenerate loci are redrawn.
    """
    if n < 1:
        raise DomainError(f"sample count must be at least 1, got {n}")
    chart = get_chart(system_id)
    params = chart.resolve_params(params)
    box = chart.sample_box(params)
    samples = []
    for index in range(n):
        rng = point_rng(seed, system_id, index)
        for _ in range(MAX_REJECTIONS):
            u = tuple(float(rng.uniform(lo, hi)) for lo, hi in box)
            if not chart.is_degenerate(u):
                break
        else:
            raise DomainError(f"system {system_id}: no regular sample after {MAX_REJECTIONS} draws")
        samples.append(CoordTriple(system_id, u, params))
    LOGGER.debug(f"system {system_id}: drew {n} samples with seed {seed}")
    return samples


def _check_ordering(chart, rho, params):
    """Closed interlacing check; boundary values (e.g. rho1 = 0) are admissible here."""
    for name, value, interval in zip(chart.coordinates, rho, chart.domain(params)):
        if not interval.lo - ORDERING_TOL <= value <= interval.hi + ORDERING_TOL:
            raise DomainError(
                f"system {chart.system_id}: {name}={value} violates ordering [{interval.lo}, {interval.hi}]")


def identity_terms(system_id, rho, params=None):
    """Printed squares (or quadratic combinations) and the signed identity defect."""
    chart = get_chart(system_id)
    if chart.identity_fn is None:
        raise CapabilityError(f"system {system_id} has no algebraic constraint identity")
    resolved = chart.resolve_params(params)
    if len(rho) != 3:
        raise DomainError(f"system {system_id} takes 3 coordinates, got {len(rho)}")
    _check_ordering(chart, rho, resolved)
    if chart.has(CONSTRAINT_IDENTITY_ONLY):
        LOGGER.debug(f"system {system_id}: identity check without branch extraction")
    return chart.identity_fn(*rho, resolved)


def constraint_identity(system_id, rho, params=None):
    """|sum z^2 - 1| evaluated from the chart's algebraic relations (systems 17-21)."""
    _, defect = identity_terms(system_id, rho, params)
    return abs(defect)

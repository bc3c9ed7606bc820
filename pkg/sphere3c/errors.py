"""Exception hierarchy for the complex-sphere toolkit."""


class Sphere3CError(Exception):
    """Base class for every error raised by the library."""


class DomainError(Sphere3CError, ValueError):
    """Coordinates outside a chart domain or an ordering violation."""


class CapabilityError(Sphere3CError):
    """The coordinate system lacks the requested capability."""


class PoleError(Sphere3CError, ZeroDivisionError):
    """Evaluation at a pole (gamma function, spectrum point, parameter pole)."""


class RegionError(Sphere3CError):
    """Argument outside the documented reliable region of a special function."""


class DegenerateMetricError(Sphere3CError):
    """Singular or non-orthogonal metric at the requested point."""


class QuantumNumberError(Sphere3CError, ValueError):
    """Invalid mode labels; the message names the violated constraint."""


class ConditioningError(Sphere3CError):
    """Energy too close to a spectrum point for the eigen-expansion."""

"""Exception types shared across the package."""


class CofferingError(Exception):
    """Base class for all errors raised by this package."""


class OutOfDomainError(CofferingError):
    """An axial coordinate lies outside the profile's domain."""

    def __init__(self, z, zmin, zmax):
        super().__init__(f"z={z!r} outside profile domain [{zmin!r}, {zmax!r}]")
        self.z = z
        self.zmin = zmin
        self.zmax = zmax


class SingularDerivativeError(CofferingError):
    """The profile slope diverges at the requested point (e.g. a spherical pole)."""


class DivergentCoordinateError(CofferingError):
    """The conformal coordinate diverges at the requested point (rho -> 0)."""


class CoordinateRangeError(CofferingError):
    """A conformal coordinate value is outside the range attained by the profile."""


class QuadratureError(CofferingError):
    """Adaptive quadrature failed to meet the requested tolerance.

    The achieved error estimate is kept in ``estimate``.
    """

    def __init__(self, message, estimate):
        super().__init__(f"{message} (achieved error estimate {estimate:.3e})")
        self.estimate = estimate


class CommensurabilityError(CofferingError):
    """Capsule barrel length is not an integer number of coffer steps.

    Carries the nearest admissible configuration so callers can correct it.
    """

    def __init__(self, rprime_over_r, n, step, m_nearest, admissible):
        msg = (
            f"capsule barrel half-length R'/R={rprime_over_r!r} is not an integer "
            f"multiple of the row step {step!r} (N={n}); nearest admissible is "
            f"m'={m_nearest} giving R'/R={admissible!r}"
        )
        super().__init__(msg)
        self.m_nearest = m_nearest
        self.admissible = admissible


class ProjectionError(CofferingError):
    """A point lies at or behind the pinhole plane and cannot be projected."""

    def __init__(self, message, labels=None):
        super().__init__(message)
        self.labels = labels or []


class UnidentifiableFitError(CofferingError):
    """The annotation geometry cannot constrain the camera height."""

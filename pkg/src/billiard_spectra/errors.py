"""Exception types shared across the package."""


class BilliardError(Exception):
    """Base class for all package-specific errors."""


class NonConvex(BilliardError):
    """Curvature radius is not strictly positive somewhere on the boundary."""


class NotClosed(BilliardError):
    """First harmonic of the curvature-radius profile violates curve closure."""


class BadAxisRatio(BilliardError):
    """Ellipse axis ratio outside (0, 1]."""


class DegenerateChord(BilliardError):
    """Chord endpoints coincide; the chord length derivative is singular."""


class SolverFailure(BilliardError):
    """The next-intersection solver could not certify a bracket."""


class NoConvergence(BilliardError):
    """Iterative minimization hit its iteration cap before reaching tolerance."""


class OrderViolation(BilliardError):
    """Monotone ordering of an orbit configuration could not be restored."""


class OrderMismatch(BilliardError):
    """Series operands carry incompatible truncation orders or backends."""


class NotNearIdentity(BilliardError):
    """A substitution increment carries an x-dependent term at order y^0."""


class HasConstantTerm(BilliardError):
    """Series argument must vanish at y = 0 but has a constant term."""


class BadLeadingCoefficient(BilliardError):
    """Series reversion needs a unit (or invertible) leading coefficient."""


class ConstraintViolation(BilliardError):
    """A structural identity (symplectic or symmetry) failed beyond tolerance."""


class SeedOrderExceeded(BilliardError):
    """Requested normal-form order outstrips the certified seed expansion."""


class OrderExceeded(BilliardError):
    """Requested expansion order exceeds the available coefficients."""


class IllConditioned(BilliardError):
    """Least-squares fit is too ill-conditioned to identify coefficients."""

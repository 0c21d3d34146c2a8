"""Exception hierarchy.

Every math-domain failure derives from :class:`DomainError` so callers (the
CLI in particular) can map the whole family onto one exit code.
"""


class ZetaOmegaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ZetaOmegaError, ValueError):
    """Input lies on, or too close to, a singular lattice."""


class PoleAtOne(DomainError):
    pass


class PoleAtNonPositiveInteger(DomainError):
    pass


class NonPositiveIntegerShift(DomainError):
    pass


class PoleAtNode(DomainError):
    pass


class PoleAtInteger(DomainError):
    pass


class NearZetaZero(DomainError):
    pass


class SingularityInDisk(DomainError):
    pass


class NonConvergent(ZetaOmegaError, ArithmeticError):
    """A series or quadrature failed to reach its tolerance within the cap."""


class InadmissiblePoint(ZetaOmegaError, ValueError):
    pass


class UnsupportedMode(ZetaOmegaError, ValueError):
    pass


class UnknownIdentity(ZetaOmegaError, KeyError):
    pass


class EmptyGrid(ZetaOmegaError, ValueError):
    pass

"""Exception types raised across the package."""


class ApdError(Exception):
    """Base class for all errors raised by :mod:`apd`."""


class DomainError(ApdError, ValueError):
    """An argument lies outside the domain of a formula or family."""


class ZeroBase(DomainError):
    """A negative power was requested of a zero lattice entry."""


class ParseError(ApdError, ValueError):
    """A matrix file is malformed or does not describe a square grid."""


class DimensionMismatch(ApdError, ValueError):
    pass


class OrderTooLarge(ApdError, ValueError):
    """Refusal to enumerate a symmetric group above the configured cap."""

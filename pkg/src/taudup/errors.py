"""Exceptions shared across the package."""


class TauDupError(Exception):
    """Base class for all package errors."""


class NoSolution(TauDupError):
    """The linear system A*X = B has no solution."""


class BadRelation(TauDupError):
    """A quiver relation is not admissible (short, non-parallel, or malformed)."""


class NotFiniteDimensional(TauDupError):
    """Paths beyond the length cap do not all vanish in the quotient."""


class NotBasisAdapted(TauDupError):
    """The non-idempotent basis span is not a nilpotent ideal."""


class NotProjective(TauDupError):
    """Operation requires a projective module."""


class Indeterminate(TauDupError):
    """An isomorphism search was truncated without a verdict."""


class EndTooLarge(TauDupError):
    """Endomorphism ring exceeds the enumeration threshold."""


class BoundTooSmall(TauDupError):
    """The dimension bound misses modules the search needs."""


class NotInH(TauDupError):
    """Module is outside the image class of the lifting map."""


class NotFound(TauDupError):
    """Interval search produced no match."""


class NotUnique(TauDupError):
    """Interval search produced several matches."""


class NotMaximalChain(TauDupError):
    """A composed sequence fails to be a maximal chain."""


class VerificationFailure(TauDupError):
    """An internal consistency assertion failed."""

"""Exception hierarchy shared by all modules."""


class QuatRepError(Exception):
    """Base class for every error raised by this package."""


class WordSyntaxError(QuatRepError, SyntaxError):
    """Malformed word or presentation text."""


class EmptyWordError(QuatRepError, ValueError):
    """A presentation with nothing on either side."""


class ArgumentError(QuatRepError, ValueError):
    """An argument outside the documented domain."""


class ZeroPolynomial(QuatRepError, ValueError):
    """Operation undefined for the zero polynomial."""


class MissingVariable(QuatRepError, KeyError):
    """Evaluation point lacks a variable used by the polynomial."""

    def __str__(self):
        return Exception.__str__(self)


class NotExpressible(QuatRepError, ValueError):
    """Polynomial cannot be rewritten in the requested coordinates."""


class NotUnitNorm(QuatRepError, ValueError):
    """Quaternion norm differs from 1 beyond tolerance."""


class DegeneratePoint(QuatRepError, ValueError):
    """Point admits no irreducible or almost-irreducible pair."""


class DomainError(QuatRepError, ValueError):
    """A radicand or invariant fell outside its admissible range."""


class UnsupportedAlgebra(QuatRepError, ValueError):
    """Algebra parameters not supported by the requested operation."""


class ZeroAxisDirection(QuatRepError, ValueError):
    """The pure part of the linear part vanishes."""


class UnsupportedIdeal(QuatRepError, ValueError):
    """Ideal shape not handled, e.g. a generator involving s."""


class OffVariety(QuatRepError, ValueError):
    """Point does not satisfy the ideal within tolerance."""

"""Exception hierarchy shared by all arithvol modules."""


class ArithvolError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedCombination(ArithvolError):
    """Requested a model/metric combination outside the supported catalog."""


class NegativeDegree(ArithvolError):
    """Underlying bundle degree must be nonnegative."""


class ModelMismatch(ArithvolError):
    """Operands live on different models or metric families."""


class InvalidTwist(ArithvolError):
    """Vertical twist data is invalid (non-prime, or net negative multiplicity)."""


class ScopeExceeded(ArithvolError):
    """Instance is outside the exact-enumeration scope limits."""


class BudgetExhausted(ArithvolError):
    """A refinement or enumeration budget ran out before certification."""


class AmbiguousBoundary(ArithvolError):
    """A count was requested but some sections have uncertified boundary status."""


class NotPrime(ArithvolError):
    """Flag characteristic must be a prime number."""


class NotRational(ArithvolError):
    """Flag data on the fiber is not rational over the prime field."""


class ZeroSection(ArithvolError):
    """The zero section has no valuation."""


class RankDeficient(ArithvolError):
    """Lattice basis does not have full rank."""


class DimensionMismatch(ArithvolError):
    """Polytope operands have different ambient dimensions."""


class NotAmpleInCatalog(ArithvolError):
    """Bundle is outside the declared ample sub-family."""


class QuadratureNotConverged(ArithvolError):
    """Numerical quadrature failed to reach the requested tolerance."""

"""Exception hierarchy shared by all gorlat modules."""


class GorlatError(Exception):
    """Base class for every error raised by gorlat."""


class DimensionError(GorlatError, ValueError):
    """Operands have incompatible or invalid shapes."""


class SingularMatrixError(GorlatError, ValueError):
    """A nonsingular matrix was required."""


class DegenerateSimplexError(GorlatError, ValueError):
    """The vertex set does not span a full-dimensional simplex."""


class InvalidHermError(GorlatError, ValueError):
    """Matrix is not in Hermite normal form."""


class CapacityError(GorlatError, RuntimeError):
    """An enumeration would exceed its configured cap."""


class PreconditionError(GorlatError, ValueError):
    """Inputs violate a documented precondition."""


class InvalidSpecError(GorlatError, ValueError):
    """A family parameter record violates its invariants."""


class NotCyclicNormalizableError(GorlatError, ValueError):
    """No coordinate of a group element has the full order as denominator."""


class NotGorensteinError(GorlatError):
    """The input is certified not Gorenstein by a structural criterion."""

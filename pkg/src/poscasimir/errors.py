"""Exception hierarchy shared by all modules."""


class CasimirError(Exception):
    """Base class for every error raised by this package."""


class InadmissibleTypeError(CasimirError, ValueError):
    """Malformed Lie type text or an (family, rank) pair outside the classification."""


class BasisMismatchError(CasimirError, ValueError):
    pass


class CapExceededError(CasimirError):
    """The Weyl group (or an orbit) is larger than the enumeration cap."""


class DimensionBoundError(CasimirError):
    """A weight system would exceed the configured dimension bound."""


class NonDominantError(CasimirError, ValueError):
    pass


class NumericRangeError(CasimirError, OverflowError):
    """Spectral parameters too large for double precision evaluation."""


class DegeneratePointError(CasimirError, ValueError):
    """Weyl denominator vanishes (some root pairs to ~0 with the parameters)."""


class NonReducedWordError(CasimirError, ValueError):
    pass


class ConsistencyError(CasimirError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class UnsupportedTypeError(CasimirError, ValueError):
    pass

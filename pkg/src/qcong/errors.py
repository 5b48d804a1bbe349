"""Exception types shared across the package."""


class QcongError(Exception):
    pass


class PrecisionError(QcongError, ValueError):
    """A series is not known far enough for the requested operation."""


class NonIntegralError(QcongError, ValueError):
    """An exact rational showed up where an integer was required."""


class NotInvertibleError(QcongError, ZeroDivisionError):
    pass


class RepresentationError(QcongError, ValueError):
    """A series is not a rational polynomial in x of the requested shape."""


class VerificationError(QcongError, AssertionError):
    """An identity or congruence that should hold exactly did not.

    These are hard failures: either the implementation is wrong or the
    claimed mathematical statement is.
    """

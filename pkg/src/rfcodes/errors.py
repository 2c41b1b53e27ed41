"""Exception types raised by the rfcodes package.

Every error derives from :class:`RFCodesError`; the CLI reports the class
name of the error it caught, so the names are part of the public surface.
"""


class RFCodesError(Exception):
    """Base class for all domain errors."""


# finite fields

class NotPrime(RFCodesError, ValueError):
    pass


class ReducibleModulus(RFCodesError, ValueError):
    pass


class DivisionByZero(RFCodesError, ZeroDivisionError):
    pass


class MixedFields(RFCodesError, ValueError):
    pass


class IndexOutOfRange(RFCodesError, IndexError):
    pass


# rational-function codes

class NotAFunction(RFCodesError, ValueError):
    """The pair (a, b) reduces to b = 0, i.e. the constant infinity."""


class MessageOutOfRange(RFCodesError, ValueError):
    pass


class DegreeTooLarge(RFCodesError, ValueError):
    pass


class NoSolution(RFCodesError):
    """The decoding system has only the zero solution."""


class VerificationFailed(RFCodesError):
    """A decoded candidate violates the degree or distance bound."""


class LengthMismatch(RFCodesError, ValueError):
    pass


class TooLarge(RFCodesError, ValueError):
    pass


# zeta functions and thresholds

class InvalidL(RFCodesError, ValueError):
    pass


class NegativePointCount(RFCodesError, ValueError):
    pass


class NonIntegerResult(RFCodesError, ValueError):
    pass


class OutOfRange(RFCodesError, ValueError):
    pass


class NotASquare(RFCodesError, ValueError):
    pass


class BracketFailure(RFCodesError, RuntimeError):
    pass

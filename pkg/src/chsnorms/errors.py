"""Exception types raised by chsnorms.

Every error derives from :class:`ChsError`, itself a ``ValueError``, so
callers can catch broadly or by name.
"""


class ChsError(ValueError):
    pass


# graph construction
class LoopRejected(ChsError):
    pass


class IndexOutOfRange(ChsError):
    pass


class InvalidParameter(ChsError):
    pass


# graph6 / edge-list parsing
class MalformedHeader(ChsError):
    pass


class CharacterOutOfRange(ChsError):
    pass


class TruncatedBits(ChsError):
    pass


class TrailingGarbage(ChsError):
    pass


class NonIntegerToken(ChsError):
    pass


class CountMismatch(ChsError):
    pass


# spectra
class ConvergenceFailure(ChsError):
    pass


class UnsupportedFamily(ChsError):
    pass


class InvalidK(ChsError):
    pass


class InvalidP(ChsError):
    pass


# norms
class OddDegree(ChsError):
    pass


class DegreeTooSmall(ChsError):
    pass


class UnsupportedDegree(ChsError):
    pass


# analysis
class LengthMismatch(ChsError):
    pass


class OrderMismatch(ChsError):
    pass


class NotSingularlyCospectral(ChsError):
    def __init__(self, message, power=None):
        super().__init__(message)
        self.power = power


class BipartiteInput(ChsError):
    pass


class OrderTooSmall(ChsError):
    pass


class OrderTooLarge(ChsError):
    pass


class ExtremalViolation(ChsError):
    pass

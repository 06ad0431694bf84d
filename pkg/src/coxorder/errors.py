"""Exception types shared by the whole package."""


class CoxError(Exception):
    "base class"


class ParseError(CoxError):
    pass


class UnsupportedLabel(CoxError):
    pass


class InvalidMatrix(CoxError):
    pass


class IndexOutOfRange(CoxError):
    pass


class NotPositive(CoxError):
    pass


class DependentRoots(CoxError):
    pass


class TruncationLimit(CoxError):
    def __init__(self, msg, cap=None):
        CoxError.__init__(self, msg)
        self.cap = cap


class UnsupportedSystem(CoxError):
    pass


class UnsupportedInfinite(CoxError):
    pass


class MixedSystems(CoxError):
    pass


class NoUpperBound(CoxError):
    pass


class LengthMismatch(CoxError):
    pass


class NotCoclosed(CoxError):
    pass


class NotInvolution(CoxError):
    pass


class NotQuasiparabolic(CoxError):
    pass


class UnknownCheck(CoxError):
    pass


class TheoremViolation(CoxError):
    "a proved statement failed on a concrete instance; this is a bug"

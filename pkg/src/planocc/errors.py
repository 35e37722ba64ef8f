"""Exception types raised across the package."""


class PlanOccError(Exception):
    """Base class for every error raised by planocc."""


class NonzeroRemainder(PlanOccError, ArithmeticError):
    """An exact division left a nonzero remainder."""


class NotASquareConstant(PlanOccError, ArithmeticError):
    """The constant term of a series has no rational square root."""


class InvalidMap(PlanOccError, ValueError):
    """Raw permutation data does not describe a rooted planar map."""


class NotInvolution(InvalidMap):
    pass


class NotConnected(InvalidMap):
    pass


class NotPlanar(InvalidMap):
    pass


class UnsupportedValency(PlanOccError, ValueError):
    """A face valency outside the range the formulas cover (valency 1)."""


class NonIntegerCoefficient(PlanOccError, ArithmeticError):
    """An occurrence series came out with a non-integral or negative coefficient."""


class BranchSelectionFailure(PlanOccError, ArithmeticError):
    pass


class InsufficientOrder(PlanOccError, ValueError):
    pass


class SizeLimitExceeded(PlanOccError, ValueError):
    pass

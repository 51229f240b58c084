"""Exception hierarchy shared by every theta3 module."""


class Theta3Error(Exception):
    """Base class for all errors raised by theta3."""


class ReducibleModulus(Theta3Error, ValueError):
    pass


class DegreeMismatch(Theta3Error, ValueError):
    pass


class CtxMismatch(Theta3Error, ValueError):
    pass


class ZeroInverse(Theta3Error, ZeroDivisionError):
    pass


class ZeroOrder(Theta3Error, ValueError):
    pass


class ZeroLog(Theta3Error, ValueError):
    pass


class ZeroInput(Theta3Error, ValueError):
    pass


class CtxTooLarge(Theta3Error):
    """The field is too big for a table-based operation."""


class NotCoprime(Theta3Error, ValueError):
    pass


class BudgetExceeded(Theta3Error):
    """A size limit (factorization, memory, export) would be exceeded."""


class ParseError(Theta3Error, ValueError):
    pass


class LabelModeUnavailable(Theta3Error):
    pass

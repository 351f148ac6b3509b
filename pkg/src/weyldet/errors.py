"""Exception hierarchy shared by every module of the package."""


class WeylError(Exception):
    """Base class for all domain errors raised by weyldet."""


class IndexMismatch(WeylError, ValueError):
    pass


class DivisionByZero(WeylError, ZeroDivisionError):
    pass


class NotDivisible(WeylError, ArithmeticError):
    pass


class ZeroInput(WeylError, ValueError):
    pass


class BoundExceeded(WeylError, RuntimeError):
    pass


class BadIndices(WeylError, IndexError):
    pass


class SizeMismatch(WeylError, ValueError):
    pass


class NotTriangular(WeylError, ValueError):
    pass


class InternalInconsistency(WeylError, RuntimeError):
    """An identity that must hold by construction failed; never swallow this."""


class ExprSyntaxError(WeylError, ValueError):
    """Malformed expression text; ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class IndexOutOfRange(ExprSyntaxError):
    pass


class FormatError(WeylError, ValueError):
    pass


class DimensionError(WeylError, ValueError):
    pass

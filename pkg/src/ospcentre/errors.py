"""Exception types shared by the package."""


class InvalidArgument(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtEvaluation(ArithmeticError):
    """A rational function was evaluated at a root of its denominator."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point

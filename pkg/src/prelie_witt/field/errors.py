"""Exceptions shared by the scalar fields."""


class ModeMismatchError(TypeError):
    """Raised when Q(i) and Q(alpha, eps) values meet in one operation."""


class DenominatorVanishesError(ZeroDivisionError):
    """A rational function was evaluated where its denominator is zero."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point

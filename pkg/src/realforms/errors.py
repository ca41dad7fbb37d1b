"""Exception types shared across the package."""


class RealFormsError(Exception):
    pass


class ParseError(RealFormsError, ValueError):
    """Malformed element text. ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class NotAUnit(RealFormsError, ArithmeticError):
    pass


class VariableMismatch(RealFormsError, ValueError):
    pass


class DomainError(RealFormsError, ValueError):
    pass


class BezoutMismatch(RealFormsError, ValueError):
    pass


class NonUnitDeterminant(RealFormsError, ArithmeticError):
    pass


class ChartMismatch(RealFormsError, ValueError):
    pass


class NotOrientationPreserving(RealFormsError, ValueError):
    pass


class Singular(RealFormsError, ValueError):
    pass


class Undersampled(RealFormsError, ValueError):
    pass

"""Exception hierarchy. Every domain failure derives from :class:`SeriesError`."""


class SeriesError(Exception):
    """Base class for all domain errors raised by artseries.

    ``location`` is filled in by the expression evaluator when the error is
    raised while running a script statement.
    """

    location = None


class InvalidScalar(SeriesError, ValueError):
    pass


class UndefinedPower(SeriesError, ValueError):
    pass


class UndefinedArgument(SeriesError, ValueError):
    pass


class WindowViolation(SeriesError, ValueError):
    pass


class DuplicateExponent(SeriesError, ValueError):
    pass


class PrecisionExceeded(SeriesError, ValueError):
    pass


class OrientationMismatch(SeriesError, ValueError):
    pass


class DivisionByZero(SeriesError, ZeroDivisionError):
    pass


class NoExponentInverse(SeriesError, ArithmeticError):
    pass


class NonPositiveDegree(SeriesError, ValueError):
    pass


class NonPositiveLeading(SeriesError, ValueError):
    pass


class TooFewVariables(SeriesError, ValueError):
    pass


class VariableMismatch(SeriesError, ValueError):
    pass


class InvalidPartition(SeriesError, ValueError):
    pass


class UnsupportedBasis(SeriesError, ValueError):
    pass


class BoundMismatch(SeriesError, ValueError):
    pass


class ParseError(SeriesError, SyntaxError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column
        self.location = (line, column)

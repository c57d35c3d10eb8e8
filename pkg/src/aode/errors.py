"""Exception hierarchy shared by the library and the CLI.

Each class carries the process exit code the CLI uses when it escapes.
"""


class AodeError(Exception):
    exit_code = 1


class DimensionError(AodeError):
    """Some component of the algebraic set has dimension two or more."""
    exit_code = 2


class TrivialSystem(AodeError):
    """Every chain was discarded: the system has only constant solutions."""
    exit_code = 0


class ParseError(AodeError):
    exit_code = 3

    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class AutonomyError(ParseError):
    """The independent variable occurs in the input."""


class ResourceLimit(AodeError):
    exit_code = 4


class OrderLimit(ResourceLimit):
    pass


class FactorizationLimit(ResourceLimit):
    pass


class ExtensionTowerLimit(ResourceLimit):
    pass


class ConstantPolynomial(AodeError, ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass

"""Exceptions shared by every funceq module.

MathError subclasses are mathematical failures (exit code 1 in the CLI),
InputError subclasses are malformed input (exit code 2).
"""


class FuncEqError(Exception):
    """Base class of all funceq errors."""


class MathError(FuncEqError):
    pass


class InputError(FuncEqError):
    pass


class DivisionByZero(MathError, ZeroDivisionError):
    pass


class PoleAtPoint(MathError, ZeroDivisionError):
    def __init__(self, point, message=None):
        self.point = point
        super(PoleAtPoint, self).__init__(message or 'denominator vanishes at {}'.format(point))


class BoundExceeded(MathError):
    def __init__(self, bound):
        self.bound = bound
        super(BoundExceeded, self).__init__(
            'closure exceeded {} elements (infinite or too large group)'.format(bound))


class SingularSystem(MathError):
    """The system determinant is identically zero.

    Args:
        determinant: the determinant form, kept for diagnosis.
    """
    def __init__(self, determinant):
        self.determinant = determinant
        super(SingularSystem, self).__init__('system determinant vanishes identically')


class ExcludedPoint(MathError):
    def __init__(self, point, polynomial):
        self.point = point
        self.polynomial = polynomial
        super(ExcludedPoint, self).__init__(
            'point {} is excluded: {} vanishes there'.format(point, polynomial))


class OrderMismatch(InputError, ValueError):
    pass


class NotCoprime(InputError, ValueError):
    pass


class InvalidGroup(InputError):
    def __init__(self, violations):
        self.violations = list(violations)
        super(InvalidGroup, self).__init__('; '.join(self.violations))


class OrderTooLarge(InputError):
    pass


class NotAbelian(InputError):
    pass


class EquationSyntaxError(InputError):
    """Parse failure at a character offset of the source text."""
    def __init__(self, offset, expected, message=None):
        self.offset = offset
        self.expected = expected
        super(EquationSyntaxError, self).__init__(
            message or 'at offset {}: expected {}'.format(offset, expected))


class UnknownSymbol(EquationSyntaxError):
    def __init__(self, offset, symbol):
        self.symbol = symbol
        super(UnknownSymbol, self).__init__(
            offset, 'a known symbol', 'at offset {}: unknown symbol {!r}'.format(offset, symbol))


class NonMoebiusArgument(EquationSyntaxError):
    def __init__(self, offset, argument):
        self.argument = argument
        super(NonMoebiusArgument, self).__init__(
            offset, 'a linear fractional argument',
            'at offset {}: argument {} is not a linear fractional map'.format(offset, argument))


class AmbiguousVariableModel(InputError):
    pass

"""
Custom exceptions for curvebounds
"""


class CurveBoundsError(Exception):
    """Base exception for the library"""
    pass


class ConfigurationError(CurveBoundsError):
    """Configuration related errors"""
    pass


class ValidationError(CurveBoundsError, ValueError):
    """Invalid arguments or violated hypotheses"""
    pass


class IntegralityError(CurveBoundsError, ArithmeticError):
    """An exact division left a remainder"""
    pass


class EnumerationLimitError(ValidationError):
    """Degree outside the enumeration range"""
    pass


class OutputError(CurveBoundsError):
    """Writing a result file failed"""
    pass


def exact_div(numerator: int, denominator: int, what: str = "value") -> int:
    """
    Divide and insist on a zero remainder.

    Raises:
        IntegralityError: If denominator does not divide numerator
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegralityError(
            f"{what}: {numerator} is not divisible by {denominator}"
        )
    return quotient

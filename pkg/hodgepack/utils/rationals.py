from fractions import Fraction
from math import isqrt
from typing import Any

from multimethod import multimethod
from sympy import factorint

from hodgepack.exception import ParseError

__all__ = [
    'to_fraction', 'format_rational', 'format_value', 'is_rational_square',
    'squarefree_part'
]


@multimethod
def to_fraction(value: bool) -> Fraction:
    raise ParseError(f'expected a rational number, got {value!r}.')


@multimethod
def to_fraction(value: int) -> Fraction:
    return Fraction(value)


@multimethod
def to_fraction(value: Fraction) -> Fraction:
    return value


@multimethod
def to_fraction(value: str) -> Fraction:
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f'"{value}" is not a rational of the form p/q.')


@multimethod
def to_fraction(value: float) -> Fraction:
    raise ParseError(f'floating-point value {value!r} is not exact; '
                     'write rationals as "p/q" strings.')


@multimethod
def to_fraction(value: object) -> Fraction:
    raise ParseError(f'expected a rational number, got {value!r}.')


def format_rational(value: Any) -> str:
    return str(Fraction(value))


def format_value(value: Any) -> Any:
    """
    Recursively turn report values into JSON-safe data; rationals become
    "p/q" strings.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): format_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [format_value(v) for v in value]
    if hasattr(value, 'to_dict'):
        return format_value(value.to_dict())
    return str(value)


def is_rational_square(value: Any) -> bool:
    value = Fraction(value)
    if value < 0:
        return False
    num, den = value.numerator, value.denominator
    return isqrt(num)**2 == num and isqrt(den)**2 == den


def squarefree_part(value: Any) -> int:
    """
    The squarefree integer in the square class of a nonzero rational.
    """
    value = Fraction(value)
    if value == 0:
        raise ValueError('zero has no square class.')
    part = -1 if value < 0 else 1
    n = abs(value.numerator * value.denominator)
    for prime, exponent in factorint(n).items():
        if exponent % 2:
            part *= prime
    return part

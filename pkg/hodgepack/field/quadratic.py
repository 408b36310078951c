from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from sympy import factorint

from hodgepack.exception import FieldMismatchError, InputError

__all__ = ['QuadElem', 'quad_mul', 'check_field_tag', 'sqrt_minus_d']


@lru_cache(maxsize=None)
def check_field_tag(d: int) -> int:
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise InputError(f'field tag must be a positive integer, got {d!r}.')
    for prime, exponent in factorint(d).items():
        if exponent > 1:
            raise InputError(
                f'field tag {d} is not squarefree (divisible by {prime}^2).')
    return d


@dataclass(frozen=True, eq=False)
class QuadElem:
    """
    The element a + b*sqrt(-d) of the imaginary quadratic field Q(sqrt(-d)).
    """
    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, 'a', Fraction(self.a))
        object.__setattr__(self, 'b', Fraction(self.b))
        check_field_tag(self.d)

    @classmethod
    def rational(cls, a: Union[int, Fraction], d: int) -> 'QuadElem':
        return cls(Fraction(a), Fraction(0), d)

    def _coerce(self, other: Any) -> 'QuadElem':
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise FieldMismatchError(self.d, other.d)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadElem(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def conj(self) -> 'QuadElem':
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a + self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> 'QuadElem':
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError('zero has no inverse in Q(sqrt(-d)).')
        return QuadElem(self.a / norm, -self.b / norm, self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __neg__(self) -> 'QuadElem':
        return QuadElem(-self.a, -self.b, self.d)

    def __add__(self, other: Any) -> 'QuadElem':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'QuadElem':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other: Any) -> 'QuadElem':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other: Any) -> 'QuadElem':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadElem(self.a * other, self.b * other, self.d)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return quad_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'QuadElem':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadElem(self.a / other, self.b / other, self.d)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return quad_mul(self, other.inverse())

    def __rtruediv__(self, other: Any) -> 'QuadElem':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return quad_mul(other, self.inverse())

    def __pow__(self, exponent: int) -> 'QuadElem':
        if exponent < 0:
            return self.inverse()**(-exponent)
        result, base = QuadElem(Fraction(1), Fraction(0), self.d), self
        while exponent:
            if exponent & 1:
                result = quad_mul(result, base)
            base = quad_mul(base, base)
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, QuadElem):
            return (self.d, self.a, self.b) == (other.d, other.a, other.b)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = f'sqrt(-{self.d})'
        if self.a == 0:
            return f'{self.b}*{root}'
        sign = '+' if self.b > 0 else '-'
        return f'{self.a} {sign} {abs(self.b)}*{root}'

    def __repr__(self) -> str:
        return f'QuadElem({self})'


def quad_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    if x.d != y.d:
        raise FieldMismatchError(x.d, y.d)
    return QuadElem(x.a * y.a - x.d * x.b * y.b, x.a * y.b + y.a * x.b, x.d)


def sqrt_minus_d(d: int) -> QuadElem:
    return QuadElem(Fraction(0), Fraction(1), d)

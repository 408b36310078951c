from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, List, Optional, Sequence, Tuple

from hodgepack.exception import InputError
from hodgepack.quat.hilbert import (Place, check_reciprocity, hilbert_symbol,
                                    relevant_places)
from hodgepack.utils.logging import logger
from hodgepack.utils.rationals import to_fraction

__all__ = [
    'QuatAlg', 'is_split', 'norm_eq_search', 'conic_point_search'
]


@dataclass(frozen=True)
class QuatAlg:
    """
    The quaternion algebra (a, b) over Q: i^2 = a, j^2 = b, ij = -ji.
    """
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        a, b = to_fraction(self.a), to_fraction(self.b)
        if a == 0 or b == 0:
            raise InputError(f'structure constants must be nonzero, '
                             f'got ({a}, {b}).')
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)

    def places(self) -> List[Place]:
        return relevant_places(self.a, self.b)

    def symbols(self) -> Dict[Place, int]:
        return check_reciprocity(self.a, self.b)

    def ramified_places(self) -> List[Place]:
        return [place for place, s in self.symbols().items() if s == -1]

    def is_split(self) -> bool:
        return not self.ramified_places()

    def equivalent(self, other: 'QuatAlg') -> bool:
        """
        Isomorphism over Q, decided by comparing local symbols everywhere.
        """
        places = set(self.places()) | set(other.places())
        return all(
            hilbert_symbol(self.a, self.b, place) == hilbert_symbol(
                other.a, other.b, place) for place in places)

    def reduced_norm(self, x: Sequence[Any]) -> Fraction:
        x0, x1, x2, x3 = (to_fraction(c) for c in x)
        return x0 * x0 - self.a * x1 * x1 - self.b * x2 * x2 + \
            self.a * self.b * x3 * x3

    def __str__(self) -> str:
        return f'({self.a}, {self.b})'


def is_split(A: QuatAlg) -> bool:
    return A.is_split()


def _square_root(x: Fraction) -> Optional[int]:
    if x < 0 or x.denominator != 1:
        return None
    root = isqrt(x.numerator)
    return root if root * root == x.numerator else None


def norm_eq_search(n: Any, d: int,
                   bound: int) -> Optional[Tuple[Fraction, Fraction]]:
    """
    Looks for x = p/s, y = q/s with |p|, |q|, s <= bound and x^2 + d y^2 = n.
    A miss is inconclusive.
    """
    n = to_fraction(n)
    if n == 0:
        raise InputError('norm target must be nonzero.')
    if bound < 1:
        raise InputError(f'search bound must be positive, got {bound}.')
    for s in range(1, bound + 1):
        for q in range(bound + 1):
            p = _square_root(n * s * s - d * q * q)
            if p is not None and p <= bound:
                return Fraction(p, s), Fraction(q, s)
            if n * s * s - d * q * q < 0:
                break
    logger.debug(f'no solution of x^2 + {d}y^2 = {n} with height <= {bound}.')
    return None


def conic_point_search(a: Any, b: Any,
                       bound: int) -> Optional[Tuple[Fraction, Fraction]]:
    """
    Looks for a rational point X = p/s, Y = q/s on a X^2 + b Y^2 = 1.
    """
    a, b = to_fraction(a), to_fraction(b)
    if a == 0 or b == 0:
        raise InputError('conic coefficients must be nonzero.')
    for s in range(1, bound + 1):
        for q in range(bound + 1):
            p = _square_root((s * s - b * q * q) / a)
            if p is not None and p <= bound:
                return Fraction(p, s), Fraction(q, s)
    return None

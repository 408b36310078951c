from typing import Any, Dict, List, Union

from sympy import isprime, legendre_symbol, multiplicity, oo, primefactors

from hodgepack.exception import ConsistencyError, InputError
from hodgepack.utils.rationals import to_fraction

__all__ = [
    'INFINITY', 'Place', 'hilbert_symbol', 'relevant_places',
    'hilbert_symbols', 'check_reciprocity'
]

INFINITY = 'oo'

Place = Union[int, str]


def _check_place(place: Any) -> Place:
    if place is oo or place in ('oo', 'inf', 'infinity'):
        return INFINITY
    if isinstance(place, int) and not isinstance(place, bool) and \
            isprime(place):
        return place
    raise InputError(f'place must be a prime or infinity, got {place!r}.')


def _integral(x: Any, name: str) -> int:
    """
    An integer in the same square class as the nonzero rational x.
    """
    x = to_fraction(x)
    if x == 0:
        raise InputError(f'{name} must be nonzero.')
    return x.numerator * x.denominator


def _odd_symbol(a: int, b: int, p: int) -> int:
    alpha, beta = multiplicity(p, abs(a)), multiplicity(p, abs(b))
    u, v = a // p**alpha, b // p**beta
    sign = (-1)**(alpha * beta * ((p - 1) // 2))
    return int(sign * legendre_symbol(u % p, p)**beta *
               legendre_symbol(v % p, p)**alpha)


def _two_symbol(a: int, b: int) -> int:
    alpha, beta = multiplicity(2, abs(a)), multiplicity(2, abs(b))
    u, v = a // 2**alpha, b // 2**beta

    def epsilon(x: int) -> int:
        return ((x - 1) // 2) % 2

    def omega(x: int) -> int:
        return ((x * x - 1) // 8) % 2

    exponent = epsilon(u) * epsilon(v) + alpha * omega(v) + beta * omega(u)
    return -1 if exponent % 2 else 1


def hilbert_symbol(a: Any, b: Any, place: Any) -> int:
    """
    The local Hilbert symbol (a, b)_place: +1 iff z^2 = a x^2 + b y^2 has a
    nontrivial solution over the completion of Q at place.
    """
    place = _check_place(place)
    a, b = _integral(a, 'a'), _integral(b, 'b')
    if place == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    if place == 2:
        return _two_symbol(a, b)
    return _odd_symbol(a, b, place)


def relevant_places(*values: Any) -> List[Place]:
    """
    Infinity, 2 and the odd primes dividing a numerator or denominator; all
    other symbols are trivial.
    """
    primes = set()
    for x in values:
        primes.update(primefactors(abs(_integral(x, 'argument'))))
    return [INFINITY, 2] + sorted(p for p in primes if p != 2)


def hilbert_symbols(a: Any, b: Any) -> Dict[Place, int]:
    return {place: hilbert_symbol(a, b, place)
            for place in relevant_places(a, b)}


def check_reciprocity(a: Any, b: Any) -> Dict[Place, int]:
    symbols = hilbert_symbols(a, b)
    product = 1
    for symbol in symbols.values():
        product *= symbol
    if product != 1:
        raise ConsistencyError(
            f'Hilbert reciprocity fails for ({a}, {b}): {symbols}.')
    return symbols

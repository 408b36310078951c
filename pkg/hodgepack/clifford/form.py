from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Any, Dict, Tuple

from hodgepack.exception import InputError, ParseError
from hodgepack.field import check_field_tag
from hodgepack.utils import io
from hodgepack.utils.rationals import to_fraction
from hodgepack.utils.typing import MatrixQ

__all__ = ['QuadFormDiag', 'blade_product', 'form_from_dict', 'load_form']


@dataclass(frozen=True)
class QuadFormDiag:
    """
    psi(x, x) = sum d_i x_i^2 + d * sum d_i x_{m+i}^2 on 2m generators.
    """
    d: int
    diag: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        check_field_tag(self.d)
        diag = tuple(Fraction(x) for x in self.diag)
        object.__setattr__(self, 'diag', diag)
        if not diag:
            raise InputError('a quadratic form needs at least one d_i.')
        if any(x == 0 for x in diag):
            raise InputError(f'diagonal entries must be nonzero: {diag}.')

    @property
    def m(self) -> int:
        return len(self.diag)

    @property
    def dim(self) -> int:
        return 2 * len(self.diag)

    @cached_property
    def squares(self) -> Tuple[Fraction, ...]:
        """
        The scalars e_k^2 for k = 1..2m.
        """
        return self.diag + tuple(self.d * x for x in self.diag)

    def gram(self) -> MatrixQ:
        squares = self.squares
        return [[squares[i] if i == j else Fraction(0)
                 for j in range(self.dim)] for i in range(self.dim)]

    @property
    def delta(self) -> Fraction:
        """
        (-1)^{m(m-1)/2} d^m prod d_i; f fbar f = delta f for the f-basis.
        """
        m = self.m
        return (-1)**(m * (m - 1) // 2) * Fraction(self.d)**m * prod(self.diag)

    @property
    def norm_target(self) -> Fraction:
        return -prod(self.diag)

    def phi_matrix(self) -> MatrixQ:
        """
        J with J e_i = e_{m+i} and J e_{m+i} = -d e_i (columns are images).
        """
        m, n = self.m, self.dim
        J = [[Fraction(0)] * n for _ in range(n)]
        for i in range(m):
            J[m + i][i] = Fraction(1)
            J[i][m + i] = Fraction(-self.d)
        return J

    @cached_property
    def _products(self) -> Dict[Tuple[int, int], Tuple[Fraction, int]]:
        return {}

    def blade_product(self, a: int, b: int) -> Tuple[Fraction, int]:
        products = self._products
        if (a, b) not in products:
            products[a, b] = _blade_product(self.squares, a, b)
        return products[a, b]

    def has_weight_two_signature(self) -> bool:
        return self.diag[0] < 0 and all(x > 0 for x in self.diag[1:])

    def to_dict(self) -> Dict[str, Any]:
        return {'d': self.d, 'diag': [str(x) for x in self.diag]}

    def __str__(self) -> str:
        return f'd={self.d}, diag=({", ".join(map(str, self.diag))})'


def _blade_product(squares: Tuple[Fraction, ...], a: int,
                   b: int) -> Tuple[Fraction, int]:
    swaps, shifted = 0, a >> 1
    while shifted:
        swaps += bin(shifted & b).count('1')
        shifted >>= 1
    scalar = Fraction(-1 if swaps & 1 else 1)
    common, k = a & b, 0
    while common:
        if common & 1:
            scalar *= squares[k]
        common >>= 1
        k += 1
    return scalar, a ^ b


def blade_product(form: QuadFormDiag, a: int, b: int) -> Tuple[Fraction, int]:
    """
    Multiplies the basis blades with generator bitmasks a and b (bit k is
    e_{k+1}); returns the scalar and the resulting blade.
    """
    return form.blade_product(a, b)


def form_from_dict(data: Any) -> QuadFormDiag:
    if not isinstance(data, dict) or 'd' not in data or 'diag' not in data:
        raise ParseError('a quadratic form is an object with "d" and "diag".')
    if not isinstance(data['diag'], list):
        raise ParseError('"diag" must be a list of rationals.')
    d = to_fraction(data['d'])
    if d.denominator != 1:
        raise ParseError(f'"d" must be an integer, got {data["d"]!r}.')
    return QuadFormDiag(int(d), tuple(to_fraction(x) for x in data['diag']))


def load_form(fpath: str) -> QuadFormDiag:
    return form_from_dict(io.load_document(fpath))

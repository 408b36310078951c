from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Tuple

from hodgepack.clifford.element import CliffordElem, clifford_mul
from hodgepack.clifford.form import QuadFormDiag
from hodgepack.exception import ConsistencyError
from hodgepack.utils.logging import logger
from hodgepack.utils.rationals import is_rational_square, squarefree_part

__all__ = ['CenterInfo', 'center_element', 'center_square', 'center_type']


def center_square(form: QuadFormDiag) -> Fraction:
    """
    The closed form (-1)^m d^m prod d_i^2 of z^2.
    """
    m = form.m
    return (-1)**m * Fraction(form.d)**m * prod(x * x for x in form.diag)


def center_element(form: QuadFormDiag) -> Tuple[CliffordElem, Fraction]:
    z = CliffordElem(form, {(1 << form.dim) - 1: Fraction(1)})
    square = clifford_mul(z, z)
    expected = center_square(form)
    if square != expected:
        raise ConsistencyError(f'z^2 = {square}, expected {expected}.')
    logger.debug(f'z^2 = {expected} for form ({form}).')
    return z, expected


@dataclass(frozen=True)
class CenterInfo:
    square: Fraction
    split: bool
    # squarefree n with Q(z) = Q(sqrt(n)); 1 in the split case
    field: int
    is_K: bool

    def __str__(self) -> str:
        if self.split:
            return 'Q x Q'
        name = f'Q(sqrt({self.field}))'
        return name + ' = K' if self.is_K else name


def center_type(form: QuadFormDiag) -> CenterInfo:
    _, square = center_element(form)
    if is_rational_square(square):
        return CenterInfo(square, True, 1, False)
    n = squarefree_part(square)
    return CenterInfo(square, False, n, n == -form.d)

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Tuple

from hodgepack.clifford import (CliffordElem, QuadFormDiag, clifford_mul,
                                generator, scalar)
from hodgepack.exception import ConsistencyError
from hodgepack.field import sqrt_minus_d
from hodgepack.utils.logging import logger

__all__ = ['FBasis', 'build_f_basis']


@dataclass(frozen=True, eq=False)
class FBasis:
    form: QuadFormDiag
    # f_1, ..., f_{2m} over K
    elements: Tuple[CliffordElem, ...]
    f: CliffordElem
    fbar: CliffordElem
    delta: Fraction

    @property
    def m(self) -> int:
        return self.form.m

    def __getitem__(self, j: int) -> CliffordElem:
        """
        f_j with the 1-based index used in the formulas.
        """
        return self.elements[j - 1]

    @property
    def g_plus(self) -> CliffordElem:
        """
        f + fbar as a rational element.
        """
        return (self.f + self.fbar).to_ring('Q')

    @property
    def g_minus(self) -> CliffordElem:
        """
        sqrt(-d) (f - fbar) as a rational element.
        """
        return (sqrt_minus_d(self.form.d) * (self.f - self.fbar)).to_ring('Q')


def _require(condition: bool, relation: str) -> None:
    if not condition:
        raise ConsistencyError(f'f-basis relation {relation} fails.')


def build_f_basis(form: QuadFormDiag) -> FBasis:
    m, d = form.m, form.d
    phi = sqrt_minus_d(d)
    e = [generator(form, k) for k in range(1, 2 * m + 1)]

    lower = [(phi * e[i] + e[m + i]) / (2 * d * form.diag[i])
             for i in range(m)]
    upper = [(-phi * e[i] + e[m + i]) / 2 for i in range(m)]
    elements = tuple(lower + upper)

    one = scalar(form, 1)
    for j, fj in enumerate(elements, 1):
        _require(not clifford_mul(fj, fj), f'f{j}^2 = 0')
    for j, k in combinations(range(2 * m), 2):
        anti = clifford_mul(elements[j], elements[k]) + \
            clifford_mul(elements[k], elements[j])
        if k - j == m:
            _require(anti == one, f'f{j + 1}f{k + 1} + f{k + 1}f{j + 1} = 1')
        else:
            _require(not anti, f'f{j + 1}f{k + 1} + f{k + 1}f{j + 1} = 0')
    for i in range(m):
        c = form.d * form.diag[i]
        _require(elements[i].conj() == elements[m + i] / c,
                 f'conj(f{i + 1}) = f{m + i + 1} / (d d{i + 1})')
        _require(elements[m + i].conj() == elements[i] * c,
                 f'conj(f{m + i + 1}) = d d{i + 1} f{i + 1}')

    f = one
    for fj in upper:
        f = clifford_mul(f, fj)
    fbar = f.conj()

    lower_product = one
    for fj in lower:
        lower_product = clifford_mul(lower_product, fj)
    _require(fbar == lower_product * (Fraction(d)**m * prod(form.diag)),
             'fbar = d^m prod(d_i) f_1...f_m')

    delta = form.delta
    _require(
        clifford_mul(clifford_mul(f, fbar), f) == f * delta,
        'f fbar f = delta f')
    _require(
        clifford_mul(clifford_mul(fbar, f), fbar) == fbar * delta,
        'fbar f fbar = delta fbar')

    logger.debug(f'f-basis verified for form ({form}), delta = {delta}.')
    return FBasis(form, elements, f, fbar, delta)

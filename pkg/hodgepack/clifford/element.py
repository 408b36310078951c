from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Tuple

from hodgepack.clifford.form import QuadFormDiag, blade_product
from hodgepack.exception import ConsistencyError
from hodgepack.field import QuadElem
from hodgepack.utils.typing import SparseVector

__all__ = [
    'CliffordElem', 'clifford_mul', 'conj_coeffs', 'blade', 'generator',
    'scalar', 'blade_indices', 'blade_grade'
]


def blade_indices(b: int) -> Tuple[int, ...]:
    return tuple(k + 1 for k in range(b.bit_length()) if b >> k & 1)


def blade_grade(b: int) -> int:
    return bin(b).count('1')


class CliffordElem:
    """
    A sparse element of C(V) (ring 'Q') or C(V)_K (ring 'K'), stored as a map
    from blade bitmasks to nonzero coefficients.
    """
    def __init__(self,
                 form: QuadFormDiag,
                 terms: Dict[int, Any],
                 ring: str = 'Q') -> None:
        if ring not in ('Q', 'K'):
            raise ValueError(f'unknown coefficient ring "{ring}".')
        self.form = form
        self.ring = ring
        self.terms: Dict[int, Any] = {}
        for b, c in terms.items():
            if not c:
                continue
            if ring == 'Q':
                if isinstance(c, QuadElem):
                    raise ValueError('rational element with coefficient '
                                     f'{c} outside Q.')
                c = Fraction(c)
            elif not isinstance(c, QuadElem):
                c = QuadElem.rational(c, form.d)
            self.terms[b] = c

    def _promote(self, other: 'CliffordElem') -> Tuple[str, 'CliffordElem']:
        if other.form is not self.form and other.form != self.form:
            raise ValueError('Clifford elements of different forms: '
                             f'({self.form}) and ({other.form}).')
        ring = 'K' if 'K' in (self.ring, other.ring) else 'Q'
        return ring, other

    def __iter__(self) -> Iterator[Tuple[int, Any]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, b: int) -> Any:
        return self.terms.get(b, 0)

    def __add__(self, other: Any) -> 'CliffordElem':
        if not isinstance(other, CliffordElem):
            other = scalar(self.form, other, self.ring)
        ring, other = self._promote(other)
        terms = dict(self.terms)
        for b, c in other.terms.items():
            terms[b] = terms[b] + c if b in terms else c
        return CliffordElem(self.form, terms, ring)

    __radd__ = __add__

    def __neg__(self) -> 'CliffordElem':
        return CliffordElem(self.form, {b: -c
                                        for b, c in self.terms.items()},
                            self.ring)

    def __sub__(self, other: Any) -> 'CliffordElem':
        return self + (-other)

    def __rsub__(self, other: Any) -> 'CliffordElem':
        return (-self) + other

    def __mul__(self, other: Any) -> 'CliffordElem':
        if isinstance(other, CliffordElem):
            return clifford_mul(self, other)
        ring = 'K' if isinstance(other, QuadElem) else self.ring
        return CliffordElem(self.form,
                            {b: c * other
                             for b, c in self.terms.items()}, ring)

    def __rmul__(self, other: Any) -> 'CliffordElem':
        ring = 'K' if isinstance(other, QuadElem) else self.ring
        return CliffordElem(self.form,
                            {b: other * c
                             for b, c in self.terms.items()}, ring)

    def __truediv__(self, other: Any) -> 'CliffordElem':
        ring = 'K' if isinstance(other, QuadElem) else self.ring
        return CliffordElem(self.form,
                            {b: c / other
                             for b, c in self.terms.items()}, ring)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, CliffordElem):
            other = scalar(self.form, other, self.ring)
        return self.form == other.form and self.terms == other.terms

    __hash__ = None

    def conj(self) -> 'CliffordElem':
        if self.ring == 'Q':
            return self
        return CliffordElem(self.form,
                            {b: c.conj()
                             for b, c in self.terms.items()}, 'K')

    def grade(self, k: int) -> 'CliffordElem':
        return CliffordElem(
            self.form,
            {b: c
             for b, c in self.terms.items() if blade_grade(b) == k}, self.ring)

    def is_even(self) -> bool:
        return all(blade_grade(b) % 2 == 0 for b in self.terms)

    def reversion(self) -> 'CliffordElem':
        terms = {}
        for b, c in self.terms.items():
            k = blade_grade(b)
            terms[b] = -c if (k * (k - 1) // 2) % 2 else c
        return CliffordElem(self.form, terms, self.ring)

    def to_ring(self, ring: str) -> 'CliffordElem':
        if ring == self.ring:
            return self
        if ring == 'K':
            return CliffordElem(self.form, self.terms, 'K')
        terms = {}
        for b, c in self.terms.items():
            if not c.is_rational():
                raise ConsistencyError(
                    f'coefficient {c} of blade {blade_indices(b)} is not '
                    'rational.')
            terms[b] = c.a
        return CliffordElem(self.form, terms, 'Q')

    def to_vector(self) -> SparseVector:
        """
        Coordinates on the 2^{2m} blade basis, indexed by blade bitmask.
        """
        return dict(self.to_ring('Q').terms)

    @classmethod
    def from_vector(cls, form: QuadFormDiag,
                    vector: SparseVector) -> 'CliffordElem':
        return cls(form, dict(vector), 'Q')

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        texts = []
        for b, c in sorted(self.terms.items()):
            name = ''.join(f'e{k}' for k in blade_indices(b)) or '1'
            texts.append(f'({c})*{name}')
        return ' + '.join(texts)

    def __repr__(self) -> str:
        return f'CliffordElem[{self.ring}]({self})'


def clifford_mul(x: CliffordElem, y: CliffordElem) -> CliffordElem:
    ring, y = x._promote(y)
    terms: Dict[int, Any] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            s, c = blade_product(x.form, a, b)
            value = ca * cb * s
            if c in terms:
                terms[c] = terms[c] + value
            else:
                terms[c] = value
    return CliffordElem(x.form, terms, ring)


def conj_coeffs(x: CliffordElem) -> CliffordElem:
    return x.conj()


def blade(form: QuadFormDiag, indices: Iterable[int]) -> CliffordElem:
    """
    The product e_{i1} e_{i2} ... of the given generators (1-based, any order).
    """
    result = scalar(form, 1)
    for k in indices:
        result = clifford_mul(result, generator(form, k))
    return result


def generator(form: QuadFormDiag, k: int) -> CliffordElem:
    if not 1 <= k <= form.dim:
        raise ValueError(f'generator e{k} is out of range 1..{form.dim}.')
    return CliffordElem(form, {1 << (k - 1): Fraction(1)})


def scalar(form: QuadFormDiag, c: Any, ring: str = 'Q') -> CliffordElem:
    if isinstance(c, QuadElem):
        ring = 'K'
    return CliffordElem(form, {0: c}, ring)

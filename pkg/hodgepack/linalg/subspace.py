from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from hodgepack.linalg.matrix import Echelon, Vector, to_dense, to_sparse
from hodgepack.utils.typing import MatrixQ, SparseVector

__all__ = ['SubspaceQ', 'member', 'coordinates']


class SubspaceQ:
    """
    A subspace of Q^N stored by its reduced row echelon basis. Vectors may be
    given dense (length N) or sparse (index -> coefficient).
    """
    def __init__(self, ambient: int, echelon: Optional[Echelon] = None) -> None:
        self._ambient = ambient
        self._echelon = echelon or Echelon()
        self._pivots = tuple(sorted(self._echelon.rows))

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Vector]) -> 'SubspaceQ':
        echelon = Echelon()
        for v in vectors:
            echelon.insert(cls._check(ambient, v))
        return cls(ambient, echelon)

    @classmethod
    def zero(cls, ambient: int) -> 'SubspaceQ':
        return cls(ambient)

    @staticmethod
    def _check(ambient: int, v: Vector) -> SparseVector:
        if isinstance(v, dict):
            if any(not 0 <= k < ambient for k in v):
                raise ValueError(f'vector has coordinates outside '
                                 f'0..{ambient - 1}.')
        elif len(v) != ambient:
            raise ValueError(f'vector of length {len(v)} does not live in '
                             f'ambient dimension {ambient}.')
        return to_sparse(v)

    @property
    def ambient(self) -> int:
        return self._ambient

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def __len__(self) -> int:
        return self.rank

    @property
    def pivots(self) -> Tuple[int, ...]:
        return self._pivots

    def basis(self) -> List[SparseVector]:
        return [dict(self._echelon.rows[p]) for p in self._pivots]

    def matrix(self) -> MatrixQ:
        return [to_dense(v, self._ambient) for v in self.basis()]

    def residual(self, v: Vector) -> SparseVector:
        return self._echelon.reduce(self._check(self._ambient, v))

    def member(self, v: Vector) -> bool:
        return not self.residual(v)

    def __contains__(self, v: Vector) -> bool:
        return self.member(v)

    def coordinates(self, v: Vector) -> Optional[List[Fraction]]:
        """
        Coefficients of v in basis(), or None when v is not in the span.
        """
        v = self._check(self._ambient, v)
        if self._echelon.reduce(v):
            return None
        return [v.get(p, Fraction(0)) for p in self._pivots]

    def join(self, other: 'SubspaceQ') -> 'SubspaceQ':
        if other.ambient != self._ambient:
            raise ValueError('subspaces live in different ambient spaces.')
        return SubspaceQ.span(self._ambient, self.basis() + other.basis())

    def contains(self, other: 'SubspaceQ') -> bool:
        return all(self.member(v) for v in other.basis())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubspaceQ):
            return NotImplemented
        return self._ambient == other._ambient and \
            self.rank == other.rank and self.contains(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f'SubspaceQ(ambient={self._ambient}, rank={self.rank})'


def member(S: SubspaceQ, v: Vector) -> bool:
    return S.member(v)


def coordinates(S: SubspaceQ, v: Vector) -> Optional[List[Fraction]]:
    return S.coordinates(v)

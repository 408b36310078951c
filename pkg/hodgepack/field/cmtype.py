from dataclasses import dataclass
from typing import Iterable, Tuple

from hodgepack.exception import InputError

__all__ = ['CMFieldDescriptor', 'CMType', 'cm_type_complement']


@dataclass(frozen=True)
class CMFieldDescriptor:
    """
    A CM-field of degree 2r, seen only through its embeddings 1..2r and the
    pairing conj(j) = j +/- r.
    """
    half_degree: int

    def __post_init__(self) -> None:
        if isinstance(self.half_degree, bool) or \
                not isinstance(self.half_degree, int) or self.half_degree < 1:
            raise InputError('half degree must be a positive integer, '
                             f'got {self.half_degree!r}.')

    @property
    def degree(self) -> int:
        return 2 * self.half_degree

    def embeddings(self) -> range:
        return range(1, self.degree + 1)

    def check_embedding(self, j: int) -> int:
        if not 1 <= j <= self.degree:
            raise InputError(f'embedding {j} is out of range 1..{self.degree}.')
        return j

    def conj(self, j: int) -> int:
        self.check_embedding(j)
        r = self.half_degree
        return j + r if j <= r else j - r


@dataclass(frozen=True)
class CMType:
    descriptor: CMFieldDescriptor
    # selection[i] is the chosen member of the pair {i + 1, i + 1 + r}
    selection: Tuple[int, ...]

    def __post_init__(self) -> None:
        r = self.descriptor.half_degree
        selection = tuple(self.selection)
        object.__setattr__(self, 'selection', selection)
        if len(selection) != r:
            raise InputError(f'a CM-type of a degree-{2 * r} field picks {r} '
                             f'embeddings, got {len(selection)}.')
        for i, j in enumerate(selection, 1):
            if j not in (i, i + r):
                raise InputError(
                    f'CM-type must pick embedding {i} or {i + r}, got {j}.')

    @classmethod
    def from_indices(cls, descriptor: CMFieldDescriptor,
                     indices: Iterable[int]) -> 'CMType':
        """
        Builds a CM-type from its chosen embeddings given in any order.
        """
        indices = list(indices)
        r = descriptor.half_degree
        if len(set(indices)) != len(indices):
            raise InputError(f'CM-type lists an embedding twice: {indices}.')
        for j in indices:
            descriptor.check_embedding(j)
        selection = []
        for i in range(1, r + 1):
            chosen = [j for j in indices if j in (i, i + r)]
            if len(chosen) != 1:
                raise InputError(f'CM-type must contain exactly one of '
                                 f'{i} and {i + r}, got {indices}.')
            selection.append(chosen[0])
        return cls(descriptor, tuple(selection))

    @classmethod
    def standard(cls, r: int) -> 'CMType':
        return cls(CMFieldDescriptor(r), tuple(range(1, r + 1)))

    def contains(self, j: int) -> bool:
        self.descriptor.check_embedding(j)
        return j in self.selection

    def __contains__(self, j: int) -> bool:
        return self.contains(j)

    def complement(self) -> 'CMType':
        return CMType(self.descriptor,
                      tuple(self.descriptor.conj(j) for j in self.selection))

    def __str__(self) -> str:
        return '{' + ', '.join(map(str, self.selection)) + '}'


def cm_type_complement(cm_type: CMType) -> CMType:
    return cm_type.complement()

import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from hodgepack.exception import InputError, TableValidationError
from hodgepack.field import CMFieldDescriptor, CMType

__all__ = [
    'HodgeTable', 'ValidationReport', 'validate', 'require_valid',
    'trivial_table', 'weight_two_table', 'random_table'
]

Key = Tuple[int, int, int]


class HodgeTable:
    """
    The character data of a CM-type Hodge structure: for every embedding j of
    the CM-field and every bidegree (p, q), the dimension of the
    sigma_j-eigenspace of V^{p,q}. Absent entries are zero.
    """
    def __init__(self,
                 cm_type: CMType,
                 weight: int,
                 mult: Mapping[Key, int],
                 effective: Optional[bool] = None) -> None:
        canonical = {}
        for (j, p, q), dim in mult.items():
            cm_type.descriptor.check_embedding(j)
            if dim < 0:
                raise InputError(f'multiplicity of ({j}, {p}, {q}) is '
                                 f'negative: {dim}.')
            if dim:
                canonical[(j, p, q)] = canonical.get((j, p, q), 0) + dim
        self._cm_type = cm_type
        self._weight = weight
        self._mult = dict(sorted(canonical.items()))
        if effective is None:
            effective = all(p >= 0 and q >= 0 for _, p, q in self._mult)
        self._effective = effective

    @property
    def cm_type(self) -> CMType:
        return self._cm_type

    @property
    def field(self) -> CMFieldDescriptor:
        return self._cm_type.descriptor

    @property
    def weight(self) -> int:
        return self._weight

    @property
    def effective(self) -> bool:
        return self._effective

    def __getitem__(self, key: Key) -> int:
        return self._mult.get(key, 0)

    def __iter__(self) -> Iterator[Key]:
        return iter(self._mult)

    def __len__(self) -> int:
        return len(self._mult)

    def items(self) -> Iterator[Tuple[Key, int]]:
        return iter(self._mult.items())

    def entries(self, j: int) -> Dict[Tuple[int, int], int]:
        return {(p, q): n for (e, p, q), n in self._mult.items() if e == j}

    def totals(self) -> Dict[int, int]:
        totals = {j: 0 for j in self.field.embeddings()}
        for (j, _, _), n in self._mult.items():
            totals[j] += n
        return totals

    @property
    def rank(self) -> int:
        """
        The K-dimension m, read off the first embedding.
        """
        return self.totals()[1]

    def dim_q(self) -> int:
        return sum(self._mult.values())

    def hodge_numbers(self) -> Dict[Tuple[int, int], int]:
        numbers = defaultdict(int)
        for (_, p, q), n in self._mult.items():
            numbers[(p, q)] += n
        return dict(sorted(numbers.items()))

    def replace(self,
                mult: Mapping[Key, int],
                weight: Optional[int] = None,
                cm_type: Optional[CMType] = None) -> 'HodgeTable':
        return HodgeTable(cm_type or self._cm_type,
                          self._weight if weight is None else weight, mult)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HodgeTable):
            return NotImplemented
        return (self._cm_type, self._weight, self._mult) == \
            (other._cm_type, other._weight, other._mult)

    def __hash__(self) -> int:
        return hash((self._cm_type, self._weight, tuple(self._mult.items())))

    def __str__(self) -> str:
        texts = [f'weight {self._weight}, CM-type {self._cm_type}, '
                 f'rank {self.rank}']
        for j in self.field.embeddings():
            side = 'S' if j in self._cm_type else 'S-bar'
            types = ', '.join(f'({p},{q}):{n}'
                              for (p, q), n in self.entries(j).items())
            texts.append(f'  [{j}|{side}] {types or "-"}')
        return '\n'.join(texts)

    def __repr__(self) -> str:
        return f'HodgeTable(weight={self._weight}, mult={self._mult})'


@dataclass
class ValidationReport:
    failures: Dict[str, List[str]] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def __str__(self) -> str:
        texts = []
        for name, offending in self.failures.items():
            if offending:
                texts.append(f'[FAIL] {name}')
                texts.extend('  ' + text for text in offending)
            else:
                texts.append(f'[PASS] {name}')
        texts.extend(f'[WARN] {text}' for text in self.warnings)
        return '\n'.join(texts)


def validate(t: HodgeTable) -> ValidationReport:
    report = ValidationReport()
    conj = t.field.conj

    report.failures['weight'] = [
        f'({j}, {p}, {q}) has p + q != {t.weight}' for (j, p, q) in t
        if p + q != t.weight
    ]

    keys = set(t) | {(conj(j), q, p) for (j, p, q) in t}
    report.failures['conjugation symmetry'] = [
        f'mult({j}, {p}, {q}) = {t[j, p, q]} but '
        f'mult({conj(j)}, {q}, {p}) = {t[conj(j), q, p]}'
        for (j, p, q) in sorted(keys) if t[j, p, q] != t[conj(j), q, p]
    ]

    totals = t.totals()
    if len(set(totals.values())) > 1:
        report.failures['equal multiplicity'] = [
            f'embedding {j} has total dimension {n}'
            for j, n in totals.items()
        ]
    else:
        report.failures['equal multiplicity'] = []

    negative = [f'({j}, {p}, {q})' for (j, p, q) in t if p < 0 or q < 0]
    if t.effective:
        report.failures['effective'] = [
            f'{text} has a negative index' for text in negative
        ]
    elif negative:
        report.warnings.append('table is not effective: ' +
                               ', '.join(negative))
    return report


def require_valid(t: HodgeTable) -> HodgeTable:
    report = validate(t)
    if not report.passed:
        raise TableValidationError(report)
    return t


def trivial_table(cm_type: Optional[CMType] = None) -> HodgeTable:
    """
    The weight-0 structure of K on itself: one dimension at (0, 0) for every
    embedding.
    """
    cm_type = cm_type or CMType.standard(1)
    return HodgeTable(cm_type, 0,
                      {(j, 0, 0): 1
                       for j in cm_type.descriptor.embeddings()})


def weight_two_table(m: int, cm_type: Optional[CMType] = None) -> HodgeTable:
    """
    The weight-2 structure with dim V^{2,0} = 1 carried by sigma in the
    CM-type: sigma-types (2,0):1 and (1,1):m-1, conjugates on sigma-bar.
    """
    cm_type = cm_type or CMType.standard(1)
    if cm_type.descriptor.half_degree != 1:
        raise InputError('weight-two tables need an imaginary quadratic field.')
    if m < 1:
        raise InputError(f'rank must be positive, got {m}.')
    sigma = cm_type.selection[0]
    sigma_bar = cm_type.descriptor.conj(sigma)
    return HodgeTable(
        cm_type, 2, {
            (sigma, 2, 0): 1,
            (sigma, 1, 1): m - 1,
            (sigma_bar, 0, 2): 1,
            (sigma_bar, 1, 1): m - 1
        })


def random_table(rng: random.Random,
                 max_half_degree: int = 3,
                 max_weight: int = 4,
                 max_rank: int = 6) -> HodgeTable:
    r = rng.randint(1, max_half_degree)
    descriptor = CMFieldDescriptor(r)
    cm_type = CMType(descriptor,
                     tuple(rng.choice((i, i + r)) for i in range(1, r + 1)))
    k = rng.randint(0, max_weight)
    m = rng.randint(0, max_rank)

    mult = {}
    for i in range(1, r + 1):
        for _ in range(m):
            p = rng.randint(0, k)
            mult[(i, p, k - p)] = mult.get((i, p, k - p), 0) + 1
    for (i, p, q), n in list(mult.items()):
        mult[(descriptor.conj(i), q, p)] = n
    return HodgeTable(cm_type, k, mult)

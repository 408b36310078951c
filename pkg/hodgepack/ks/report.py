from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from hodgepack.clifford import QuadFormDiag, center_type
from hodgepack.exception import (ConsistencyError, DiscrepancyError,
                                 InconsistentInputError, InputError)
from hodgepack.hodge import HodgeTable
from hodgepack.ks.summands import binomial, check_weight_two, summand_dims
from hodgepack.polar import PolarizedSetup, signature_H
from hodgepack.quat import norm_eq_search
from hodgepack.spin import (check_invariance, decompose, form_algebra,
                            spin_algebra, uH_generators)
from hodgepack.utils.logging import logger
from hodgepack.utils.rationals import format_value

__all__ = ['PartReport', 'KSReport', 'full_report']


@dataclass
class PartReport:
    i: int
    dim: int
    endo: str
    # (dim S_i^{1,0} on sigma, on sigma-bar)
    hodge: List[int]


@dataclass
class KSReport:
    m: int
    d: int
    diag: List[Fraction]
    level: str
    dim_V: int
    delta: Fraction
    center_square: Fraction
    center: str
    case: int
    split: bool
    symbols: Dict[str, int]
    witness: Optional[List[Fraction]]
    form_algebra: Dict[str, Any]
    parts: List[PartReport]
    multiplicity: Optional[int]
    ball_dim: int
    h20: int
    h11: int
    signature: List[int]
    exact: Optional[Dict[str, Any]] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return format_value(asdict(self))

    def __str__(self) -> str:
        texts = [
            f'Kuga-Satake report (level {self.level})',
            f'  form: d = {self.d}, diag = '
            f'({", ".join(map(str, self.diag))})',
            f'  m = {self.m}, dim V = {self.dim_V}, h^(2,0) = {self.h20}, '
            f'h^(1,1) = {self.h11}',
            f'  signature of H: {tuple(self.signature)}',
            f'  delta = {self.delta}, z^2 = {self.center_square}, '
            f'center = {self.center}, m mod 4 = {self.case}',
            f'  D = (delta, d delta) is '
            f'{"split" if self.split else "non-split"}; symbols '
            + ', '.join(f'{p}: {s:+d}' for p, s in self.symbols.items())
        ]
        if self.witness:
            texts.append(f'  witness: x^2 + {self.d} y^2 = {self.delta} at '
                         f'(x, y) = ({self.witness[0]}, {self.witness[1]})')
        texts.append('  summands:')
        for part in self.parts:
            texts.append(f'    S_{part.i}: dim {part.dim}, End = {part.endo}, '
                         f'S^(1,0) dims {tuple(part.hodge)}')
        if self.multiplicity is not None:
            texts.append(f'  multiplicity of S in C+(V): {self.multiplicity}')
        texts.append(f'  ball dimension: {self.ball_dim}')
        if self.exact:
            texts.append('  exact: ' + ', '.join(
                f'{key} = {value}' for key, value in self.exact.items()))
        texts.extend(f'  note: {note}' for note in self.notes)
        return '\n'.join(texts)


def _expect(quantity: str, expected: Any, computed: Any) -> None:
    if expected != computed:
        raise DiscrepancyError(quantity, expected, computed)


def _closed_form_endo(m: int, i: int, split: bool) -> str:
    if 2 * i != m:
        return 'K'
    return 'D split' if split else 'D non-split'


def _exact_section(form: QuadFormDiag, report: KSReport,
                   max_invariance_m: int,
                   witness_bound: int) -> Dict[str, Any]:
    decomposition = decompose(form)
    dims = decomposition.dims()
    _expect('dim S', 2**(form.m + 1), decomposition.S.rank)
    _expect('dims S_i', [part.dim for part in report.parts], dims)
    for part, dim in zip(report.parts, dims):
        _expect(f'dim S_{part.i}^(1,0)', dim // 2, sum(part.hodge))

    exact: Dict[str, Any] = {'dim_S': decomposition.S.rank, 'dims': dims}
    if form.m > max_invariance_m:
        report.notes.append(f'u(H) invariance skipped for m > '
                            f'{max_invariance_m}.')
        return exact

    gens = uH_generators(form)
    invariance = check_invariance(gens, decomposition, witness_bound)
    if not invariance.passed:
        g, i, k = invariance.failures[0]
        raise DiscrepancyError(f'u(H) generator {g} preserves S_{i}', True,
                               False, context=f'basis vector {k}')
    expected = [4 if 2 * i == form.m else 2 for i in range(form.m + 1)]
    _expect('commutant dims', expected, invariance.commutant_dims)
    endo = [str(e) for e in invariance.endo]
    _expect('End(S_i)', [part.endo for part in report.parts], endo)
    exact.update(uH_dim=len(gens),
                 commutant_dims=invariance.commutant_dims,
                 endo=endo)
    for e in invariance.endo:
        if e is not None and 'idempotent_rank' in e.detail:
            exact['idempotent_rank'] = e.detail['idempotent_rank']
    return exact


def full_report(form: QuadFormDiag,
                V: HodgeTable,
                level: str = 'fast',
                bound: int = 50,
                *,
                max_exact_m: int = 5,
                allow_large: bool = False,
                max_invariance_m: int = 4,
                witness_bound: int = 200) -> KSReport:
    if level not in ('fast', 'exact'):
        raise InputError(f'level must be "fast" or "exact", got "{level}".')
    m = check_weight_two(V)
    if m != form.m:
        raise InconsistentInputError(
            f'form has m = {form.m} but the table has K-dimension {m}.')
    if not form.has_weight_two_signature():
        raise InconsistentInputError(
            'the form must have d_1 < 0 and d_2, ..., d_m > 0.')

    center = center_type(form)
    algebra = spin_algebra(form)
    symbols = algebra.symbols()
    split = algebra.is_split()
    witness = norm_eq_search(form.delta, form.d, bound)
    if witness is not None and not split:
        raise ConsistencyError(f'witness {witness} found for non-split '
                               f'{algebra}.')
    if split and witness is None:
        logger.warning(f'D is split but no witness of height <= {bound}.')

    reference = form_algebra(form)
    classified = {
        'algebra': str(reference),
        'split': reference.is_split(),
        'witness': norm_eq_search(reference.b, form.d, bound),
        'equivalent': reference.equivalent(algebra),
        # which congruence (on m or on d) the skew-field case follows
        'skew_field': not split,
        'm_mod_4': m % 4,
        'd_mod_4': form.d % 4
    }
    if m % 4 == 2:
        _expect('(delta, d delta) = (-d, -prod d_i)', True,
                classified['equivalent'])

    parts = []
    for i in range(m + 1):
        hodge = list(summand_dims(V, i))
        _expect(f'S_{i}^(1,0) dims', [binomial(m - 1, i - 1),
                                      binomial(m - 1, i)], hodge)
        parts.append(
            PartReport(i, 2 * binomial(m, i), _closed_form_endo(m, i, split),
                       hodge))

    notes = []
    multiplicity = None
    if m >= 2:
        multiplicity = 2**(m - 2)
        _expect('dim C+(V)', 2**(2 * m - 1),
                sum(part.dim for part in parts) * multiplicity)
    else:
        notes.append('m = 1: C+(V) multiplicity accounting needs m >= 2.')

    numbers = V.hodge_numbers()
    signature = signature_H(PolarizedSetup.diagonal(form))
    _expect('signature of H', (m - 1, 1), signature)

    report = KSReport(m=m,
                      d=form.d,
                      diag=list(form.diag),
                      level=level,
                      dim_V=2 * m,
                      delta=form.delta,
                      center_square=center.square,
                      center=str(center),
                      case=m % 4,
                      split=split,
                      symbols={str(p): s
                               for p, s in symbols.items()},
                      witness=list(witness) if witness else None,
                      form_algebra=classified,
                      parts=parts,
                      multiplicity=multiplicity,
                      ball_dim=m - 1,
                      h20=numbers.get((2, 0), 0),
                      h11=numbers.get((1, 1), 0),
                      signature=list(signature),
                      notes=notes)

    if level == 'exact':
        limit = max(max_exact_m, 6) if allow_large else max_exact_m
        if m > limit:
            raise InputError(f'exact level supports m <= {limit}, got {m}; '
                             'set exact.allow_large for m = 6.')
        report.exact = _exact_section(form, report, max_invariance_m,
                                      witness_bound)
    logger.success(f'Kuga-Satake report for m = {m} ({level}) is consistent.')
    return report

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from hodgepack.clifford import (CliffordElem, QuadFormDiag, blade,
                                clifford_mul, generator)
from hodgepack.exception import ConsistencyError, DiscrepancyError
from hodgepack.linalg import (SubspaceQ, identity, is_scalar_matrix, kernel,
                              mat_add, mat_scale, mat_sub, matmul, rref,
                              to_dense, transpose)
from hodgepack.quat import conic_point_search
from hodgepack.spin.decomposition import (SpinDecomposition, operator_matrix,
                                          spin_algebra)
from hodgepack.utils.logging import logger
from hodgepack.utils.rationals import is_rational_square, squarefree_part
from hodgepack.utils.typing import MatrixQ

__all__ = [
    'adjoint_matrix', 'uH_generators', 'commutant', 'EndoClass',
    'InvarianceReport', 'check_invariance'
]


def adjoint_matrix(xi: CliffordElem) -> MatrixQ:
    """
    The matrix of v -> xi v - v xi on V = span(e_1, ..., e_2m).
    """
    form = xi.form
    n = form.dim
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        e = generator(form, k + 1)
        image = clifford_mul(xi, e) - clifford_mul(e, xi)
        for b, c in image.to_ring('Q'):
            if b & (b - 1) or not b:
                raise ConsistencyError(f'[xi, e{k + 1}] leaves V.')
            M[b.bit_length() - 1][k] = c
    return M


def uH_generators(form: QuadFormDiag) -> List[CliffordElem]:
    """
    A Q-basis of u(H) inside span(e_a e_b): the elements whose adjoint action
    on V commutes with J.
    """
    J = form.phi_matrix()
    pairs = list(combinations(range(1, form.dim + 1), 2))
    actions = [adjoint_matrix(blade(form, pair)) for pair in pairs]
    brackets = [mat_sub(matmul(M, J), matmul(J, M)) for M in actions]

    n = form.dim
    rows = [[C[r][c] for C in brackets] for r in range(n) for c in range(n)]
    gens = []
    for solution in kernel(rows, len(pairs)):
        xi = CliffordElem(form, {})
        for k, c in solution.items():
            xi = xi + blade(form, pairs[k]) * c
        gens.append(xi)

    if len(gens) != form.m**2:
        raise DiscrepancyError('dim u(H)', form.m**2, len(gens),
                               context=f'form {form}')
    G = form.gram()
    for xi in gens:
        M = adjoint_matrix(xi)
        if not is_scalar_matrix(mat_add(matmul(transpose(M), G), matmul(G, M)),
                                0):
            raise ConsistencyError(f'{xi} is not psi-skew.')
    logger.debug(f'u(H) has {len(gens)} generators for form ({form}).')
    return gens


def _flatten(A: MatrixQ) -> List[Fraction]:
    return [x for row in A for x in row]


def commutant(operators: Sequence[MatrixQ], n: int) -> List[MatrixQ]:
    """
    A basis of {A : T A = A T for every T}, as n x n matrices.
    """
    rows = []
    for T in operators:
        for r in range(n):
            for c in range(n):
                row: Dict[int, Fraction] = {}
                for s in range(n):
                    if T[r][s]:
                        row[s * n + c] = row.get(s * n + c, 0) + T[r][s]
                    if T[s][c]:
                        row[r * n + s] = row.get(r * n + s, 0) - T[s][c]
                rows.append(row)
    basis = []
    for solution in kernel(rows, n * n):
        flat = to_dense(solution, n * n)
        basis.append([flat[r * n:(r + 1) * n] for r in range(n)])
    return basis


def _minimal_polynomial(X: MatrixQ) -> Tuple[Fraction, Fraction]:
    """
    (t, s) with X^2 = t X + s for a non-scalar X in a 2-dimensional algebra.
    """
    n = len(X)
    columns = [_flatten(identity(n)), _flatten(X), _flatten(matmul(X, X))]
    relations = kernel([list(row) for row in zip(*columns)], 3)
    for c in relations:
        if c.get(2):
            return -c.get(1, Fraction(0)) / c[2], -c.get(0, Fraction(0)) / c[2]
    raise ConsistencyError('X^2 is not a combination of 1 and X.')


@dataclass
class EndoClass:
    kind: str
    dim: int
    detail: Dict[str, object] = field(default_factory=dict)

    def __str__(self) -> str:
        return self.kind


def _classify_field(basis: List[MatrixQ], d: int) -> EndoClass:
    X = next(A for A in basis if not is_scalar_matrix(A, A[0][0]))
    t, s = _minimal_polynomial(X)
    disc = t * t + 4 * s
    if is_rational_square(disc):
        return EndoClass('Q x Q', len(basis), {'discriminant': disc})
    n = squarefree_part(disc)
    kind = 'K' if n == -d else f'Q(sqrt({n}))'
    return EndoClass(kind, len(basis), {'discriminant': disc})


def _classify_middle(decomposition: SpinDecomposition, i: int,
                     basis: List[MatrixQ], witness_bound: int) -> EndoClass:
    form, fb = decomposition.form, decomposition.fbasis
    part = decomposition.parts[i]
    g_plus, g_minus = fb.g_plus, fb.g_minus
    alpha = operator_matrix(part, lambda x: clifford_mul(x, g_plus), form)
    beta = operator_matrix(part, lambda x: clifford_mul(x, g_minus), form)
    n = part.rank

    quaternion = [identity(n), alpha, beta, matmul(alpha, beta)]
    span = SubspaceQ.span(n * n, [_flatten(A) for A in quaternion])
    found = SubspaceQ.span(n * n, [_flatten(A) for A in basis])
    if span.rank != 4 or span != found:
        raise DiscrepancyError('End(S_i) = <1, alpha, beta, alpha beta>', 4,
                               found.rank,
                               context=f'i = {i}, form {form}')

    algebra = spin_algebra(form)
    if not algebra.is_split():
        return EndoClass('D non-split', 4, {
            'algebra': str(algebra),
            'ramified': algebra.ramified_places()
        })

    detail: Dict[str, object] = {'algebra': str(algebra)}
    point = conic_point_search(algebra.a, algebra.b, witness_bound)
    if point is None:
        logger.warning(f'no point on {algebra.a}X^2 + {algebra.b}Y^2 = 1 '
                       f'with height <= {witness_bound}; idempotent skipped.')
        return EndoClass('D split', 4, detail)
    X, Y = point
    e = mat_scale(Fraction(1, 2),
                  mat_add(identity(n), mat_add(mat_scale(X, alpha),
                                               mat_scale(Y, beta))))
    if matmul(e, e) != e:
        raise ConsistencyError('(1 + X alpha + Y beta) / 2 is not idempotent.')
    _, rank = rref(e)
    expected = comb(form.m, form.m // 2)
    if rank != expected:
        raise DiscrepancyError('rank of split idempotent', expected, rank,
                               context=f'form {form}')
    detail.update(point=(X, Y), idempotent_rank=rank)
    return EndoClass('D split', 4, detail)


@dataclass
class InvarianceReport:
    # (generator index, part index, basis vector index) of failed inclusions
    failures: List[Tuple[int, int, int]] = field(default_factory=list)
    commutant_dims: List[int] = field(default_factory=list)
    endo: List[Optional[EndoClass]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_invariance(gens: Sequence[CliffordElem],
                     decomposition: SpinDecomposition,
                     witness_bound: int = 200) -> InvarianceReport:
    """
    Checks that left multiplication by every u(H) generator preserves every
    S_i, and computes and classifies the commutant of the action on S_i.
    """
    report = InvarianceReport()
    form = decomposition.form
    m = form.m
    for i, part in enumerate(decomposition.parts):
        operators, invariant = [], True
        basis = part.basis()
        for g, xi in enumerate(gens):
            columns = []
            for k, v in enumerate(basis):
                image = clifford_mul(xi, CliffordElem.from_vector(form, v))
                coords = part.coordinates(image.to_vector())
                if coords is None:
                    report.failures.append((g, i, k))
                    invariant = False
                    break
                columns.append(coords)
            if invariant:
                operators.append(transpose(columns))
        if not invariant:
            report.commutant_dims.append(0)
            report.endo.append(None)
            continue

        found = commutant(operators, part.rank)
        report.commutant_dims.append(len(found))
        expected = 4 if 2 * i == m else 2
        if len(found) != expected:
            report.endo.append(None)
            logger.warning(f'End(S_{i}) has dimension {len(found)}, '
                           f'expected {expected}.')
            continue
        if 2 * i == m:
            endo = _classify_middle(decomposition, i, found, witness_bound)
        else:
            endo = _classify_field(found, form.d)
        report.endo.append(endo)
        logger.debug(f'End(S_{i}) = {endo}.')
    return report

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, List, Optional, Tuple

from hodgepack.clifford import (CliffordElem, QuadFormDiag, clifford_mul,
                                generator)
from hodgepack.exception import ConsistencyError, DiscrepancyError
from hodgepack.field import sqrt_minus_d
from hodgepack.linalg import (Echelon, SubspaceQ, is_scalar_matrix, mat_add,
                              matmul)
from hodgepack.quat import QuatAlg
from hodgepack.spin.fbasis import FBasis, build_f_basis
from hodgepack.utils.logging import logger
from hodgepack.utils.typing import MatrixQ

__all__ = [
    'SpinDecomposition', 'build_S', 'operator_matrix', 'endo_operators',
    'build_parts', 'spin_algebra', 'form_algebra', 'decompose'
]


def build_S(fb: FBasis) -> SubspaceQ:
    """
    The span of b (f + fbar) and b sqrt(-d) (f - fbar) over all blades b,
    computed as the closure of {f + fbar, sqrt(-d) (f - fbar)} under left
    multiplication by the generators.
    """
    form = fb.form
    gens = [generator(form, k) for k in range(1, form.dim + 1)]
    echelon = Echelon()
    queue = deque([fb.g_plus, fb.g_minus])
    while queue:
        x = queue.popleft()
        if echelon.insert(x.to_vector()):
            queue.extend(clifford_mul(e, x) for e in gens)
    S = SubspaceQ(1 << form.dim, echelon)
    logger.debug(f'dim S = {S.rank} for form ({form}).')
    return S


def operator_matrix(S: SubspaceQ,
                    action: Callable[[CliffordElem], CliffordElem],
                    form: QuadFormDiag,
                    target: Optional[SubspaceQ] = None) -> MatrixQ:
    """
    The matrix, in the basis of S (columns) and of target (rows; S itself by
    default), of a linear map on C(V) that sends S into target.
    """
    target = target or S
    columns = []
    for k, v in enumerate(S.basis()):
        image = action(CliffordElem.from_vector(form, v)).to_vector()
        coords = target.coordinates(image)
        if coords is None:
            raise ConsistencyError(
                f'image of basis vector {k} leaves the target subspace.')
        columns.append(coords)
    return [list(row) for row in zip(*columns)] if columns else []


def endo_operators(fb: FBasis, S: SubspaceQ) -> Tuple[MatrixQ, MatrixQ]:
    """
    Right multiplications alpha: x -> x (f + fbar) and
    beta: x -> x sqrt(-d) (f - fbar) on S.
    """
    g_plus, g_minus = fb.g_plus, fb.g_minus
    alpha = operator_matrix(S, lambda x: clifford_mul(x, g_plus), fb.form)
    beta = operator_matrix(S, lambda x: clifford_mul(x, g_minus), fb.form)

    delta, d = fb.delta, fb.form.d
    alpha_beta = matmul(alpha, beta)
    checks = {
        'alpha^2 = delta': is_scalar_matrix(matmul(alpha, alpha), delta),
        'beta^2 = d delta': is_scalar_matrix(matmul(beta, beta), d * delta),
        'alpha beta = -beta alpha': is_scalar_matrix(
            mat_add(alpha_beta, matmul(beta, alpha)), 0),
        '(alpha beta)^2 = -d delta^2': is_scalar_matrix(
            matmul(alpha_beta, alpha_beta), -d * delta * delta)
    }
    for relation, passed in checks.items():
        if not passed:
            raise ConsistencyError(f'{relation} fails on S.')
    return alpha, beta


def _words(fb: FBasis, i: int) -> List[CliffordElem]:
    """
    w f for every product w = f_{j1} ... f_{ji} with j1 < ... < ji <= m.
    """
    words = []
    for indices in combinations(range(1, fb.m + 1), i):
        w = fb.f
        for j in reversed(indices):
            w = clifford_mul(fb[j], w)
        words.append(w)
    return words


def build_parts(fb: FBasis, S: SubspaceQ) -> List[SubspaceQ]:
    phi = sqrt_minus_d(fb.form.d)
    parts = []
    for i in range(fb.m + 1):
        vectors = []
        for wf in _words(fb, i):
            wf_bar = wf.conj()
            vectors.append((wf + wf_bar).to_vector())
            vectors.append((phi * (wf - wf_bar)).to_ring('Q').to_vector())
        part = SubspaceQ.span(S.ambient, vectors)
        logger.debug(f'dim S_{i} = {part.rank}.')
        parts.append(part)
    return parts


def spin_algebra(form: QuadFormDiag) -> QuatAlg:
    """
    D = (delta, d delta), generated by alpha and beta.
    """
    return QuatAlg(form.delta, form.d * form.delta)


def form_algebra(form: QuadFormDiag) -> QuatAlg:
    """
    (-d, -prod d_i); isomorphic to D when m = 2 (mod 4).
    """
    return QuatAlg(-form.d, form.norm_target)


@dataclass(eq=False)
class SpinDecomposition:
    form: QuadFormDiag
    fbasis: FBasis
    S: SubspaceQ
    parts: List[SubspaceQ]
    alpha: MatrixQ
    beta: MatrixQ

    @property
    def m(self) -> int:
        return self.form.m

    @property
    def case(self) -> int:
        return self.form.m % 4

    def dims(self) -> List[int]:
        return [part.rank for part in self.parts]


def _expect(quantity: str, expected, computed, form: QuadFormDiag) -> None:
    if expected != computed:
        raise DiscrepancyError(quantity,
                               expected,
                               computed,
                               context=f'form {form}')


def decompose(form: QuadFormDiag) -> SpinDecomposition:
    """
    Builds S, its summands S_0..S_m and the operators alpha, beta, and checks
    every dimension and containment against the closed forms.
    """
    m = form.m
    fb = build_f_basis(form)
    S = build_S(fb)
    _expect('dim S', 2**(m + 1), S.rank, form)

    alpha, beta = endo_operators(fb, S)
    parts = build_parts(fb, S)
    _expect('dim S_i', [2 * comb(m, i) for i in range(m + 1)],
            [part.rank for part in parts], form)

    total = SubspaceQ.zero(S.ambient)
    for part in parts:
        total = total.join(part)
    _expect('dim (S_0 + ... + S_m)', S.rank, total.rank, form)
    _expect('S_0 + ... + S_m = S', True, S.contains(total), form)

    g_plus, g_minus = fb.g_plus, fb.g_minus
    for i, part in enumerate(parts):
        target = part.join(parts[m - i])
        for g in (g_plus, g_minus):
            operator_matrix(part, lambda x: clifford_mul(x, g), form, target)
        logger.debug(f'alpha, beta map S_{i} into S_{i} + S_{m - i}.')

    logger.info('S = ' + ' + '.join(f'S_{i}' for i in range(m + 1)) +
                f' with dims {[part.rank for part in parts]} '
                f'for form ({form}).')
    return SpinDecomposition(form, fb, S, parts, alpha, beta)

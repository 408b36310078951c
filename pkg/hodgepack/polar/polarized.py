import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from hodgepack.clifford import QuadFormDiag
from hodgepack.exception import ConsistencyError, InconsistentInputError
from hodgepack.field import QuadElem
from hodgepack.linalg import (inertia, is_hermitian, is_scalar_matrix,
                              mat_add, matmul, signature_hermitian, transpose)
from hodgepack.utils.typing import MatrixK, MatrixQ

__all__ = [
    'PolarizedSetup', 'hermitian_form', 'signature_H', 'twisted_polarization',
    'realify', 'transport', 'random_K_matrix'
]


@dataclass(frozen=True, eq=False)
class PolarizedSetup:
    """
    The polarization psi as a Gram matrix together with the matrix J of
    multiplication by sqrt(-d).
    """
    form: QuadFormDiag
    gram: MatrixQ
    J: MatrixQ

    def __post_init__(self) -> None:
        G, J, d = self.gram, self.J, self.form.d
        n = self.form.dim
        if len(G) != n or len(J) != n:
            raise InconsistentInputError(
                f'Gram and J must be {n}x{n} for m = {self.form.m}.')
        if G != transpose(G):
            raise InconsistentInputError('Gram matrix is not symmetric.')
        if not is_scalar_matrix(matmul(J, J), -d):
            raise InconsistentInputError(f'J^2 != -{d}.')
        if not is_scalar_matrix(mat_add(matmul(transpose(J), G), matmul(G, J)),
                                0):
            raise InconsistentInputError('psi is not K-compatible: '
                                         'J^T G != -G J.')

    @classmethod
    def diagonal(cls, form: QuadFormDiag) -> 'PolarizedSetup':
        return cls(form, form.gram(), form.phi_matrix())

    @property
    def m(self) -> int:
        return self.form.m

    @property
    def d(self) -> int:
        return self.form.d


def hermitian_form(s: PolarizedSetup) -> MatrixK:
    """
    H(e_i, e_j) = psi(e_i, e_j) - (sqrt(-d) / d) psi(e_i, J e_j) on the
    K-basis e_1..e_m.
    """
    m, d = s.m, s.d
    GJ = matmul(s.gram, s.J)
    H = [[QuadElem(s.gram[i][j], -GJ[i][j] / d, d) for j in range(m)]
         for i in range(m)]
    if not is_hermitian(H):
        raise ConsistencyError('H is not hermitian.')
    return H


def signature_H(s: PolarizedSetup) -> Tuple[int, int]:
    return signature_hermitian(hermitian_form(s))


def twisted_polarization(s: PolarizedSetup) -> MatrixQ:
    """
    Psi'(v, w) = psi(v, alpha w) with alpha = sqrt(-d), i.e. the matrix G J.
    """
    P = matmul(s.gram, s.J)
    if not is_scalar_matrix(mat_add(P, transpose(P)), 0):
        raise ConsistencyError("Psi' is not alternating.")
    if not is_scalar_matrix(
            mat_add(matmul(transpose(s.J), P), matmul(P, s.J)), 0):
        raise ConsistencyError("Psi' is not K-compatible.")
    return P


def realify(P: Sequence[Sequence[QuadElem]]) -> MatrixQ:
    """
    The rational 2m x 2m matrix of the K-linear map with matrix P, in the
    basis e_1..e_m, sqrt(-d) e_1..sqrt(-d) e_m.
    """
    m = len(P)
    R = [[Fraction(0)] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        for j in range(m):
            a, b, d = P[i][j].a, P[i][j].b, P[i][j].d
            R[i][j], R[m + i][j] = a, b
            R[m + i][m + j], R[i][m + j] = a, -d * b
    return R


def transport(s: PolarizedSetup,
              P: Sequence[Sequence[QuadElem]]) -> PolarizedSetup:
    """
    The same polarization written in the K-basis given by the columns of P.
    """
    R = realify(P)
    return PolarizedSetup(s.form, matmul(matmul(transpose(R), s.gram), R),
                          s.J)


def random_K_matrix(rng: random.Random,
                    m: int,
                    d: int,
                    height: int = 3,
                    attempts: int = 100) -> MatrixK:
    """
    A random invertible m x m matrix over Q(sqrt(-d)) with small entries.
    """
    for _ in range(attempts):
        P = [[QuadElem(rng.randint(-height, height),
                       rng.randint(-height, height), d) for _ in range(m)]
             for _ in range(m)]
        _, _, radical = inertia(
            matmul([[x.conj() for x in row] for row in zip(*P)], P))
        if not radical:
            return P
    raise ConsistencyError(f'no invertible {m}x{m} matrix in {attempts} '
                           'attempts.')

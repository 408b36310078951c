from typing import List, Sequence, Tuple

from hodgepack.exception import InputError, SingularFormError
from hodgepack.field import QuadElem
from hodgepack.linalg.matrix import matmul
from hodgepack.utils.typing import MatrixK

__all__ = [
    'conj_transpose', 'is_hermitian', 'congruence', 'inertia',
    'signature_hermitian'
]


def conj_transpose(A: Sequence[Sequence[QuadElem]]) -> MatrixK:
    return [[row[i].conj() for row in A] for i in range(len(A[0]))] \
        if A else []


def is_hermitian(H: Sequence[Sequence[QuadElem]]) -> bool:
    n = len(H)
    if any(len(row) != n for row in H):
        return False
    return all(H[j][i] == H[i][j].conj() for i in range(n) for j in range(i, n))


def congruence(H: Sequence[Sequence[QuadElem]],
               P: Sequence[Sequence[QuadElem]]) -> MatrixK:
    """
    Returns P* H P, the form H in the basis given by the columns of P.
    """
    return matmul(matmul(conj_transpose(P), H), P)


def _check_field(H: Sequence[Sequence[QuadElem]]) -> int:
    tags = {x.d for row in H for x in row}
    if len(tags) > 1:
        raise InputError(f'matrix mixes fields Q(sqrt(-d)) for d in '
                         f'{sorted(tags)}.')
    return tags.pop() if tags else 1


def inertia(H: Sequence[Sequence[QuadElem]]) -> Tuple[int, int, int]:
    """
    Diagonalizes the hermitian form H by congruence and returns the numbers
    of positive, negative and zero diagonal entries.
    """
    if not is_hermitian(H):
        raise InputError('matrix is not hermitian.')
    _check_field(H)
    A: List[List[QuadElem]] = [list(row) for row in H]
    n = len(A)
    pos = neg = radical = 0

    def swap(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        if not A[k][k]:
            for j in range(k + 1, n):
                if A[j][j]:
                    swap(k, j)
                    break
            else:
                for j in range(k + 1, n):
                    if A[k][j]:
                        # e_k += t e_j makes the new diagonal 2 * norm(A[k][j])
                        t = A[k][j].conj()
                        for i in range(n):
                            A[i][k] = A[i][k] + A[i][j] * t
                        for i in range(n):
                            A[k][i] = A[k][i] + t.conj() * A[j][i]
                        break
        a = A[k][k]
        if not a:
            radical += 1
            continue
        for i in range(k + 1, n):
            c = A[i][k] / a
            if not c:
                continue
            for col in range(n):
                A[i][col] = A[i][col] - c * A[k][col]
            cbar = c.conj()
            for row in range(n):
                A[row][i] = A[row][i] - A[row][k] * cbar
        if a.a > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg, radical


def signature_hermitian(H: Sequence[Sequence[QuadElem]]) -> Tuple[int, int]:
    pos, neg, radical = inertia(H)
    if radical:
        raise SingularFormError(radical)
    return pos, neg

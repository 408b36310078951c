from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Union

from hodgepack.utils.typing import MatrixQ, SparseVector

__all__ = [
    'Echelon', 'to_sparse', 'to_dense', 'rref', 'kernel', 'matmul',
    'matvec', 'identity', 'zeros', 'transpose', 'mat_add', 'mat_sub',
    'mat_scale', 'is_scalar_matrix'
]

Vector = Union[SparseVector, Sequence[Any]]


def to_sparse(v: Vector) -> SparseVector:
    if isinstance(v, dict):
        return {k: Fraction(x) for k, x in v.items() if x}
    return {k: Fraction(x) for k, x in enumerate(v) if x}


def to_dense(v: SparseVector, n: int) -> List[Fraction]:
    dense = [Fraction(0)] * n
    for k, x in v.items():
        dense[k] = x
    return dense


class Echelon:
    """
    Incrementally maintained reduced row echelon form over Q. Rows are sparse
    and keyed by their pivot column; every row is 1 at its pivot and 0 at all
    other pivots.
    """
    def __init__(self) -> None:
        self.rows: Dict[int, SparseVector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: SparseVector) -> SparseVector:
        v = dict(v)
        for pivot in [k for k in v if k in self.rows]:
            c = v.get(pivot)
            if not c:
                continue
            for k, x in self.rows[pivot].items():
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def insert(self, v: SparseVector) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        pivot = min(v)
        c = v[pivot]
        v = {k: x / c for k, x in v.items()}
        for row in self.rows.values():
            e = row.get(pivot)
            if e:
                for k, x in v.items():
                    y = row.get(k, 0) - e * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self.rows[pivot] = v
        return True

    def sorted_rows(self) -> List[Tuple[int, SparseVector]]:
        return sorted(self.rows.items())


def rref(M: Sequence[Sequence[Any]]) -> Tuple[MatrixQ, int]:
    ncols = len(M[0]) if M else 0
    echelon = Echelon()
    for row in M:
        echelon.insert(to_sparse(row))
    R = [to_dense(row, ncols) for _, row in echelon.sorted_rows()]
    rank = len(R)
    R.extend([Fraction(0)] * ncols for _ in range(len(M) - rank))
    return R, rank


def kernel(rows: Sequence[Vector], ncols: int) -> List[SparseVector]:
    """
    A basis of {x : row . x = 0 for every row}, one vector per free column.
    """
    echelon = Echelon()
    for row in rows:
        echelon.insert(to_sparse(row))
    basis = []
    for free in range(ncols):
        if free in echelon.rows:
            continue
        x = {free: Fraction(1)}
        for pivot, row in echelon.rows.items():
            c = row.get(free)
            if c:
                x[pivot] = -c
        basis.append(x)
    return basis


def matmul(A: Sequence[Sequence[Any]],
           B: Sequence[Sequence[Any]]) -> List[List[Any]]:
    if A and len(A[0]) != len(B):
        raise ValueError(f'cannot multiply {len(A)}x{len(A[0])} by '
                         f'{len(B)}x{len(B[0]) if B else 0} matrices.')
    columns = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0))
             for col in columns] for row in A]


def matvec(A: Sequence[Sequence[Any]], v: Sequence[Any]) -> List[Any]:
    return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A]


def identity(n: int, one: Any = Fraction(1)) -> List[List[Any]]:
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> MatrixQ:
    return [[Fraction(0)] * cols for _ in range(rows)]


def transpose(A: Sequence[Sequence[Any]]) -> List[List[Any]]:
    return [list(col) for col in zip(*A)]


def mat_add(A: Sequence[Sequence[Any]],
            B: Sequence[Sequence[Any]]) -> List[List[Any]]:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A: Sequence[Sequence[Any]],
            B: Sequence[Sequence[Any]]) -> List[List[Any]]:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c: Any, A: Sequence[Sequence[Any]]) -> List[List[Any]]:
    return [[c * a for a in row] for row in A]


def is_scalar_matrix(A: Sequence[Sequence[Any]], c: Any) -> bool:
    return all(A[i][j] == (c if i == j else 0)
               for i in range(len(A)) for j in range(len(A[i])))

from collections import defaultdict
from math import comb
from typing import Dict, Optional, Tuple

from hodgepack.exception import AdmissibilityError
from hodgepack.field import CMType
from hodgepack.hodge.table import HodgeTable, trivial_table

__all__ = [
    'half_twist', 'tate_twist', 'tensor_K_halfmodule', 'ext_power_K',
    'k_minus_half', 'conjugate_type', 'is_admissible'
]


def _negative_step(t: HodgeTable) -> HodgeTable:
    mult = {}
    for (j, p, q), n in t.items():
        if j in t.cm_type:
            mult[(j, p + 1, q)] = n
        else:
            mult[(j, p, q + 1)] = n
    return t.replace(mult, weight=t.weight + 1)


def _check_positive_step(t: HodgeTable) -> None:
    k = t.weight
    for (j, p, q), n in t.items():
        if j in t.cm_type and (p, q) == (0, k):
            raise AdmissibilityError(j, p, q, n)
        if j not in t.cm_type and (p, q) == (k, 0):
            raise AdmissibilityError(j, p, q, n)


def _positive_step(t: HodgeTable) -> HodgeTable:
    _check_positive_step(t)
    mult = {}
    for (j, p, q), n in t.items():
        if j in t.cm_type:
            mult[(j, p - 1, q)] = n
        else:
            mult[(j, p, q - 1)] = n
    return t.replace(mult, weight=t.weight - 1)


def is_admissible(t: HodgeTable) -> bool:
    """
    Whether the positive half twist of t is defined.
    """
    try:
        _check_positive_step(t)
    except AdmissibilityError:
        return False
    return True


def half_twist(t: HodgeTable, n: int) -> HodgeTable:
    """
    Returns V_{n/2}: n = -1 is the negative half twist (weight k + 1),
    n = +1 the positive one (weight k - 1). Larger |n| iterate single steps.
    """
    step = _negative_step if n < 0 else _positive_step
    for _ in range(abs(n)):
        t = step(t)
    return t


def tate_twist(t: HodgeTable, n: int) -> HodgeTable:
    """
    Returns V(n), where V(n)^{p,q} = V^{p+n,q+n}; the weight becomes k - 2n.
    """
    if n == 0:
        return t
    mult = {(j, p - n, q - n): dim for (j, p, q), dim in t.items()}
    return t.replace(mult, weight=t.weight - 2 * n)


def tensor_K_halfmodule(t: HodgeTable) -> Tuple[HodgeTable, HodgeTable]:
    """
    Splits V tensor K_{-1/2} into the eigen-submodule on which both K-actions
    agree (diag) and the one on which they are conjugate (conj).
    """
    diag, conj = defaultdict(int), defaultdict(int)
    for (j, p, q), n in t.items():
        if j in t.cm_type:
            diag[(j, p + 1, q)] += n
            conj[(j, p, q + 1)] += n
        else:
            diag[(j, p, q + 1)] += n
            conj[(j, p + 1, q)] += n
    return (t.replace(diag, weight=t.weight + 1),
            t.replace(conj, weight=t.weight + 1))


def _exterior_power(types: Dict[Tuple[int, int], int],
                    i: int) -> Dict[Tuple[int, int], int]:
    # coefficient of z^i in prod (1 + x^p y^q z)^n
    poly = {(0, 0, 0): 1}
    for (p, q), n in types.items():
        expanded = defaultdict(int)
        for (P, Q, z), coeff in poly.items():
            for c in range(min(n, i - z) + 1):
                expanded[(P + c * p, Q + c * q, z + c)] += coeff * comb(n, c)
        poly = expanded
    return {(P, Q): coeff for (P, Q, z), coeff in poly.items() if z == i}


def ext_power_K(t: HodgeTable, i: int) -> HodgeTable:
    if i < 0:
        raise ValueError(f'exterior power index must be nonnegative, got {i}.')
    if i == 0:
        return trivial_table(t.cm_type)
    if i > t.rank:
        return t.replace({}, weight=i * t.weight)

    mult = {}
    for j in t.field.embeddings():
        for (p, q), n in _exterior_power(t.entries(j), i).items():
            mult[(j, p, q)] = n
    return t.replace(mult, weight=i * t.weight)


def k_minus_half(cm_type: Optional[CMType] = None) -> HodgeTable:
    """
    K_{-1/2}: the weight-one CM-type structure on K, Sigma-types (1,0).
    """
    return half_twist(trivial_table(cm_type), -1)


def conjugate_type(t: HodgeTable) -> HodgeTable:
    """
    The same character data read against the complementary CM-type.
    """
    return t.replace(dict(t.items()), cm_type=t.cm_type.complement())

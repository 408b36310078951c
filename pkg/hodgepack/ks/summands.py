from math import comb
from typing import Tuple

from hodgepack.exception import InputError
from hodgepack.hodge import (HodgeTable, ext_power_K, half_twist,
                             require_valid, tate_twist, tensor_K_halfmodule)

__all__ = [
    'binomial', 'check_weight_two', 'summand_table', 'summand_dims',
    'check_S0_tensor_S1'
]


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def check_weight_two(V: HodgeTable) -> int:
    """
    Checks that V is a valid weight-2 structure with imaginary quadratic CM
    and dim V^{2,0} = 1 on the Sigma side; returns m.
    """
    require_valid(V)
    if V.field.half_degree != 1:
        raise InputError('Kuga-Satake summands need an imaginary quadratic '
                         f'field, got half degree {V.field.half_degree}.')
    if V.weight != 2:
        raise InputError(f'V must have weight 2, got {V.weight}.')
    sigma = V.cm_type.selection[0]
    sigma_bar = V.field.conj(sigma)
    if V[sigma_bar, 2, 0] and not V[sigma, 2, 0]:
        raise InputError(
            f'V^(2,0) lies on embedding {sigma_bar}, outside the CM-type; '
            f'use the CM-type [{sigma_bar}] instead.')
    if V[sigma, 2, 0] != 1 or V[sigma_bar, 2, 0]:
        raise InputError('dim V^(2,0) must be 1, carried by the CM-type.')
    return V.rank


def summand_table(V: HodgeTable, i: int) -> HodgeTable:
    """
    The weight-one Hodge structure (wedge^i_K V)(i - 1)_{1/2} carried by S_i.
    """
    m = check_weight_two(V)
    if not 0 <= i <= m:
        raise InputError(f'summand index must lie in 0..{m}, got {i}.')
    return half_twist(tate_twist(ext_power_K(V, i), i - 1), +1)


def summand_dims(V: HodgeTable, i: int) -> Tuple[int, int]:
    """
    (dim S_i^{1,0} on sigma, dim S_i^{1,0} on sigma-bar).
    """
    S = summand_table(V, i)
    sigma = V.cm_type.selection[0]
    return S[sigma, 1, 0], S[V.field.conj(sigma), 1, 0]


def check_S0_tensor_S1(V: HodgeTable) -> bool:
    """
    V is the eigen-submodule of S_1 tensor K_{-1/2} on which both K-actions
    agree.
    """
    diag, _ = tensor_K_halfmodule(summand_table(V, 1))
    return diag == V

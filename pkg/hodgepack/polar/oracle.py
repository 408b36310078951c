from typing import List, Optional, Sequence

import numpy as np
from scipy.linalg import expm

from hodgepack.exception import InvalidPeriodError
from hodgepack.polar.polarized import PolarizedSetup
from hodgepack.spin import adjoint_matrix, uH_generators
from hodgepack.utils.logging import logger
from hodgepack.utils.typing import MatrixQ

__all__ = [
    'explicit_period', 'parse_period', 'uH_matrices', 'random_unitary',
    'transport_period', 'positivity_oracle'
]


def _float_matrix(A: MatrixQ) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in A], dtype=np.float64)


def explicit_period(s: PolarizedSetup) -> np.ndarray:
    """
    v = e_1 + (i / sqrt(d)) e_{m+1}, spanning V^{2,0} of the diagonal setup.
    """
    v = np.zeros(2 * s.m, dtype=np.complex128)
    v[0] = 1
    v[s.m] = 1j / np.sqrt(s.d)
    return v


def parse_period(pairs: Sequence[Sequence[str]]) -> np.ndarray:
    """
    A period given as (real, imaginary) pairs of decimal strings.
    """
    return np.array([complex(float(re), float(im)) for re, im in pairs],
                    dtype=np.complex128)


def uH_matrices(s: PolarizedSetup) -> List[np.ndarray]:
    return [
        _float_matrix(adjoint_matrix(xi)) for xi in uH_generators(s.form)
    ]


def random_unitary(generators: Sequence[np.ndarray],
                   rng: np.random.Generator,
                   scale: float = 0.5) -> np.ndarray:
    """
    An element of U(H)(R): the exponential of a random element of u(H).
    """
    coefficients = rng.normal(scale=scale, size=len(generators))
    return expm(sum(c * X for c, X in zip(coefficients, generators)))


def transport_period(period: np.ndarray, g: np.ndarray) -> np.ndarray:
    return g @ period


def _is_positive_definite(A: np.ndarray, tolerance: float) -> bool:
    # symmetric up to rounding; definite iff Cholesky succeeds
    if np.abs(A - A.T).max() > tolerance * max(1.0, np.abs(A).max()):
        return False
    try:
        np.linalg.cholesky((A + A.T) / 2)
    except np.linalg.LinAlgError:
        return False
    return True


def positivity_oracle(s: PolarizedSetup,
                      period: np.ndarray,
                      tolerance: float = 1e-9,
                      *,
                      sign: Optional[int] = None) -> bool:
    """
    Builds h(i) from the period line V^{2,0} = C v and checks that
    psi(., h(i) .) and Psi'(., h'(i) .) on the half twist are positive
    definite. Floating point only.
    """
    G, J = _float_matrix(s.gram), _float_matrix(s.J)
    root = np.sqrt(s.d)
    v = np.asarray(period, dtype=np.complex128)
    if v.shape != (2 * s.m, ):
        raise InvalidPeriodError(f'period must have {2 * s.m} coordinates.')
    if not np.isfinite(v).all():
        raise InvalidPeriodError('period has non-finite coordinates.')
    norm = np.linalg.norm(v)
    if norm <= tolerance:
        raise InvalidPeriodError(f'period is zero (norm {norm:.3g}).')
    v = v / norm
    vbar = v.conj()

    def psi(x: np.ndarray, y: np.ndarray) -> complex:
        return x @ G @ y

    if abs(psi(v, v)) > tolerance:
        raise InvalidPeriodError(
            f'period is not isotropic: psi(v, v) = {psi(v, v):.3g}.')
    residuals = {
        +1: np.linalg.norm(J @ v - 1j * root * v),
        -1: np.linalg.norm(J @ v + 1j * root * v)
    }
    eigen = min(residuals, key=residuals.get)
    if residuals[eigen] > tolerance:
        raise InvalidPeriodError('period is not an eigenvector of J.')
    if sign is None:
        sign = eigen
    c = psi(v, vbar)
    if abs(c.imag) > tolerance or c.real >= -tolerance:
        raise InvalidPeriodError(
            f'psi(v, vbar) = {c:.3g} must be negative.')

    # projection onto V^{2,0} + V^{0,2} along V^{1,1}
    P = (np.outer(v, vbar @ G) + np.outer(vbar, v @ G)) / c
    h = np.eye(2 * s.m) - 2 * P.real
    polarized = _is_positive_definite(G @ h, tolerance)

    alpha = sign * J
    h_twist = -sign * J @ h / root
    twisted = _is_positive_definite(G @ alpha @ h_twist, tolerance)
    logger.debug(f'positivity: psi {polarized}, twisted {twisted} '
                 f'(V^(2,0) eigenvalue {"+" if eigen > 0 else "-"}i sqrt(d)).')
    return polarized and twisted

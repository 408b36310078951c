import random
from fractions import Fraction

import numpy as np
import pytest

from hodgepack.clifford import QuadFormDiag
from hodgepack.exception import InconsistentInputError, InvalidPeriodError
from hodgepack.field import QuadElem
from hodgepack.linalg import is_hermitian, is_scalar_matrix, mat_add, transpose
from hodgepack.polar import (PolarizedSetup, explicit_period, hermitian_form,
                             parse_period, positivity_oracle, random_K_matrix,
                             random_unitary, realify, signature_H, transport,
                             transport_period, twisted_polarization,
                             uH_matrices)
from hodgepack.polar.oracle import _is_positive_definite

FORMS = [
    QuadFormDiag(3, (-1, )),
    QuadFormDiag(1, (-1, 1)),
    QuadFormDiag(2, (-3, Fraction(1, 2), 5)),
    QuadFormDiag(7, (-1, 1, 1, 2)),
]


@pytest.mark.parametrize('form', FORMS)
def test_hermitian_form_diagonal(form):
    s = PolarizedSetup.diagonal(form)
    H = hermitian_form(s)
    for i in range(form.m):
        for j in range(form.m):
            assert H[i][j] == (form.diag[i] if i == j else 0)
    assert signature_H(s) == (form.m - 1, 1)


def test_signature_k3_instance():
    form = QuadFormDiag(3, (-1, ) + (1, ) * 9)
    assert signature_H(PolarizedSetup.diagonal(form)) == (9, 1)


@pytest.mark.parametrize('form', FORMS)
def test_twisted_polarization(form):
    s = PolarizedSetup.diagonal(form)
    P = twisted_polarization(s)
    assert is_scalar_matrix(mat_add(P, transpose(P)), 0)
    value = sum(P[0][k] * s.J[k][0] for k in range(form.dim))
    assert value == -form.d * form.diag[0]
    assert value > 0


@pytest.mark.parametrize('form', FORMS[:3])
def test_transport(form):
    rng = random.Random(form.d)
    s = PolarizedSetup.diagonal(form)
    for _ in range(10):
        t = transport(s, random_K_matrix(rng, form.m, form.d))
        assert is_hermitian(hermitian_form(t))
        assert signature_H(t) == signature_H(s)
        twisted_polarization(t)


def test_realify():
    d = 2
    P = [[QuadElem(1, 2, d)]]
    R = realify(P)
    # (1 + 2 sqrt(-2)) * sqrt(-2) = -4 + sqrt(-2)
    assert R == [[1, -4], [2, 1]]


def test_setup_validation():
    form = QuadFormDiag(1, (-1, 1))
    G = form.gram()
    with pytest.raises(InconsistentInputError):
        PolarizedSetup(form, G, G)
    J = form.phi_matrix()
    G[0][1] = Fraction(1)
    with pytest.raises(InconsistentInputError):
        PolarizedSetup(form, G, J)
    with pytest.raises(InconsistentInputError):
        PolarizedSetup(QuadFormDiag(1, (-1, )), form.gram(), J)


@pytest.mark.parametrize('form', FORMS[:3])
def test_positivity_explicit_period(form):
    s = PolarizedSetup.diagonal(form)
    assert positivity_oracle(s, explicit_period(s))
    assert positivity_oracle(s, 2j * explicit_period(s))


@pytest.mark.parametrize('scale', [0.5, 1.0])
def test_positivity_transported_periods(scale):
    form = QuadFormDiag(3, (-1, 1))
    s = PolarizedSetup.diagonal(form)
    period = explicit_period(s)
    matrices = uH_matrices(s)
    assert len(matrices) == 4
    rng = np.random.default_rng(0)
    for _ in range(20):
        g = random_unitary(matrices, rng, scale)
        assert positivity_oracle(s, transport_period(period, g))


def test_positive_definite_ill_conditioned():
    q, _ = np.linalg.qr(np.random.default_rng(1).normal(size=(4, 4)))
    A = q @ np.diag([1.1e-5, 3.4e-5, 8.8e4, 2.6e5]) @ q.T
    assert _is_positive_definite(A, 1e-9)
    assert _is_positive_definite(A + 1e-12 * np.triu(np.ones((4, 4)), 1),
                                 1e-9)
    assert not _is_positive_definite(
        q @ np.diag([-1.1e-5, 3.4e-5, 8.8e4, 2.6e5]) @ q.T, 1e-9)
    assert not _is_positive_definite(np.array([[1.0, 1.0], [0.0, 1.0]]),
                                     1e-9)


def test_positivity_preconditions():
    form = QuadFormDiag(1, (-1, 1))
    s = PolarizedSetup.diagonal(form)
    # e_2 + i e_4 is an isotropic eigenvector with psi(v, vbar) > 0
    v = np.array([0, 1, 0, 1j])
    with pytest.raises(InvalidPeriodError):
        positivity_oracle(s, v)
    with pytest.raises(InvalidPeriodError):
        positivity_oracle(s, np.array([1, 0, 0]))
    with pytest.raises(InvalidPeriodError):
        positivity_oracle(s, np.array([1, 1, 0, 0]))
    with pytest.raises(InvalidPeriodError):
        positivity_oracle(s, np.zeros(4))
    with pytest.raises(InvalidPeriodError):
        positivity_oracle(s, np.array([np.nan, 0, 0, 1j]))


def test_parse_period():
    v = parse_period([('1', '0'), ('0', '0.5')])
    assert v[0] == 1 and v[1] == 0.5j

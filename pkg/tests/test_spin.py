from fractions import Fraction
from math import comb

import pytest

from hodgepack.clifford import (QuadFormDiag, clifford_mul, generator,
                                scalar)
from hodgepack.linalg import is_scalar_matrix, mat_add, matmul, transpose
from hodgepack.spin import (adjoint_matrix, build_f_basis, build_parts,
                            build_S, check_invariance, commutant, decompose,
                            endo_operators, form_algebra, spin_algebra,
                            uH_generators)

SPLIT = QuadFormDiag(1, (-1, 1))
NON_SPLIT = QuadFormDiag(3, (-1, 2))


def test_f_basis_m1():
    form = QuadFormDiag(3, (-1, ))
    fb = build_f_basis(form)
    f1, f2 = fb[1], fb[2]
    assert clifford_mul(f1, f2) + clifford_mul(f2, f1) == 1
    assert not clifford_mul(f1, f1)
    assert not clifford_mul(f2, f2)


@pytest.mark.parametrize('form', [
    SPLIT, NON_SPLIT,
    QuadFormDiag(7, (Fraction(-1, 2), 3, 5)),
    QuadFormDiag(2, (-3, 1, 1, 2))
])
def test_f_basis_relations(form):
    fb = build_f_basis(form)
    m, d = form.m, form.d
    for j in range(1, 2 * m + 1):
        assert not clifford_mul(fb[j], fb[j])
    for i in range(1, m + 1):
        assert fb[i].conj() == fb[m + i] / (d * form.diag[i - 1])
    assert clifford_mul(clifford_mul(fb.f, fb.fbar), fb.f) == \
        fb.f * fb.delta
    assert fb.delta == form.delta


def test_delta_split_instance():
    fb = build_f_basis(SPLIT)
    assert fb.delta == 1
    assert clifford_mul(clifford_mul(fb.f, fb.fbar), fb.f) == fb.f


@pytest.mark.parametrize('form,dim', [(SPLIT, 8), (NON_SPLIT, 8),
                                      (QuadFormDiag(2, (-1, 1, 3)), 16)])
def test_build_S(form, dim):
    fb = build_f_basis(form)
    S = build_S(fb)
    assert S.rank == dim
    assert fb.g_plus.to_vector() in S
    assert fb.g_minus.to_vector() in S
    # S is a left ideal
    for k in (1, form.dim):
        image = clifford_mul(generator(form, k), fb.g_plus)
        assert image.to_vector() in S


def test_endo_operators():
    fb = build_f_basis(SPLIT)
    S = build_S(fb)
    alpha, beta = endo_operators(fb, S)
    assert is_scalar_matrix(matmul(alpha, alpha), 1)
    assert is_scalar_matrix(mat_add(matmul(alpha, beta), matmul(beta, alpha)),
                            0)

    form = QuadFormDiag(7, (-2, 1, 3))
    fb = build_f_basis(form)
    alpha, beta = endo_operators(fb, build_S(fb))
    ab = matmul(alpha, beta)
    assert is_scalar_matrix(matmul(alpha, alpha), form.delta)
    assert is_scalar_matrix(matmul(beta, beta), form.d * form.delta)
    assert is_scalar_matrix(matmul(ab, ab), -form.d * form.delta**2)


@pytest.mark.parametrize('form,dims', [
    (SPLIT, [2, 4, 2]),
    (QuadFormDiag(3, (-1, 1, 1, 1)), [2, 8, 12, 8, 2]),
])
def test_parts(form, dims):
    decomposition = decompose(form)
    assert decomposition.dims() == dims
    assert sum(dims) == decomposition.S.rank
    fb = decomposition.fbasis
    assert fb.g_plus.to_vector() in decomposition.parts[0]
    assert build_parts(fb, decomposition.S)[0] == decomposition.parts[0]


@pytest.mark.parametrize('form', [
    QuadFormDiag(3, (-1, )), SPLIT,
    QuadFormDiag(2, (-1, 1, 5))
])
def test_uH_generators(form):
    gens = uH_generators(form)
    assert len(gens) == form.m**2
    G, J = form.gram(), form.phi_matrix()
    for xi in gens:
        assert xi.is_even()
        M = adjoint_matrix(xi)
        assert is_scalar_matrix(mat_add(matmul(transpose(M), G),
                                        matmul(G, M)), 0)
        assert matmul(M, J) == matmul(J, M)
    if form.m == 1:
        (xi, ) = gens
        assert set(dict(xi)) == {0b11}


def test_invariance_split_instance():
    decomposition = decompose(SPLIT)
    report = check_invariance(uH_generators(SPLIT), decomposition)
    assert report.passed
    assert report.commutant_dims == [2, 4, 2]
    assert [e.kind for e in report.endo] == ['K', 'D split', 'K']
    assert report.endo[1].detail['idempotent_rank'] == comb(2, 1)


def test_invariance_non_split_instance():
    decomposition = decompose(NON_SPLIT)
    report = check_invariance(uH_generators(NON_SPLIT), decomposition)
    assert report.passed
    assert report.commutant_dims == [2, 4, 2]
    assert report.endo[1].kind == 'D non-split'
    assert not spin_algebra(NON_SPLIT).is_split()
    assert spin_algebra(NON_SPLIT).equivalent(form_algebra(NON_SPLIT))


def test_invariance_m3():
    form = QuadFormDiag(2, (-1, 1, 3))
    report = check_invariance(uH_generators(form), decompose(form))
    assert report.passed
    assert report.commutant_dims == [2, 2, 2, 2]
    assert all(e.kind == 'K' for e in report.endo)


def test_commutant():
    identity = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert len(commutant([identity], 3)) == 9
    T = [[Fraction(v) for v in row] for row in [[1, 0, 0], [0, 2, 0],
                                                 [0, 0, 3]]]
    assert len(commutant([T], 3)) == 3
    one = scalar(SPLIT, 1)
    assert adjoint_matrix(one) == [[0] * 4 for _ in range(4)]

import random
from fractions import Fraction

import pytest

from hodgepack.clifford import (CliffordElem, QuadFormDiag, blade,
                                blade_product, center_element, center_square,
                                center_type, clifford_mul, conj_coeffs,
                                form_from_dict, generator, load_form, scalar)
from hodgepack.exception import ConsistencyError, InputError, ParseError
from hodgepack.field import QuadElem, sqrt_minus_d

FORM = QuadFormDiag(3, (Fraction(-1), Fraction(2), Fraction(5, 3)))


def random_elem(rng: random.Random, form: QuadFormDiag) -> CliffordElem:
    terms = {
        rng.randrange(1 << form.dim): Fraction(rng.randint(-4, 4),
                                               rng.randint(1, 3))
        for _ in range(4)
    }
    return CliffordElem(form, terms)


def test_generator_products():
    e1, e2 = generator(FORM, 1), generator(FORM, 2)
    assert clifford_mul(e1, e1) == FORM.diag[0]
    assert clifford_mul(e1, e2) + clifford_mul(e2, e1) == 0
    e12 = clifford_mul(e1, e2)
    assert clifford_mul(e12, e12) == -FORM.diag[0] * FORM.diag[1]

    e4 = generator(FORM, 4)
    assert clifford_mul(e4, e4) == FORM.d * FORM.diag[0]


def test_blade_product_sign():
    # e2 * e1 = -e1 e2
    assert blade_product(FORM, 0b10, 0b01) == (-1, 0b11)
    assert blade_product(FORM, 0b01, 0b10) == (1, 0b11)
    # e1e2 * e1 = -e1 e1 e2 = -d_1 e2
    assert blade_product(FORM, 0b11, 0b01) == (-FORM.diag[0], 0b10)
    assert blade(FORM, [2, 1]) == -blade(FORM, [1, 2])


def test_associativity():
    rng = random.Random(0)
    for _ in range(30):
        x, y, z = (random_elem(rng, FORM) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_conj_coeffs():
    root = sqrt_minus_d(FORM.d)
    x = generator(FORM, 1) * root
    assert conj_coeffs(x) == generator(FORM, 1) * (-root)
    y = blade(FORM, [1, 3]) + 2
    assert conj_coeffs(y) == y
    z = x * x
    assert conj_coeffs(z) == z
    assert z == -FORM.d * FORM.diag[0]


def test_ring_conversion():
    x = blade(FORM, [1, 2]) * Fraction(1, 2)
    assert x.to_ring('K').to_ring('Q') == x
    assert x.to_vector() == {0b11: Fraction(1, 2)}
    assert CliffordElem.from_vector(FORM, x.to_vector()) == x
    y = x * sqrt_minus_d(FORM.d)
    with pytest.raises(ConsistencyError):
        y.to_ring('Q')


def test_grade_and_reversion():
    x = scalar(FORM, 1) + generator(FORM, 1) + blade(FORM, [1, 2]) + \
        blade(FORM, [1, 2, 3])
    assert x.grade(2) == blade(FORM, [1, 2])
    assert not x.is_even()
    assert (x.grade(0) + x.grade(2)).is_even()
    reversed_ = x.reversion()
    assert reversed_.grade(2) == blade(FORM, [2, 1])
    assert reversed_.grade(3) == -blade(FORM, [1, 2, 3])
    a, b = random_elem(random.Random(1), FORM), \
        random_elem(random.Random(2), FORM)
    assert (a * b).reversion() == b.reversion() * a.reversion()


def test_center_examples():
    form = QuadFormDiag(3, (-1, ))
    z, square = center_element(form)
    assert square == -3
    assert clifford_mul(z, z) == -3
    info = center_type(form)
    assert not info.split and info.is_K

    form = QuadFormDiag(1, (-1, 1))
    assert center_element(form)[1] == 1
    assert center_type(form).split


@pytest.mark.parametrize('d', [1, 2, 7])
@pytest.mark.parametrize('m', [1, 2, 3, 4])
def test_center_square_closed_form(d, m):
    form = QuadFormDiag(d, tuple(Fraction(k + 1, 2) * (-1 if k == 0 else 1)
                                 for k in range(m)))
    z, square = center_element(form)
    assert square == center_square(form)
    assert clifford_mul(z, z) == square
    # z commutes with every even element
    even = blade(form, [1, 2])
    assert clifford_mul(z, even) == clifford_mul(even, z)


def test_form_basics():
    assert FORM.m == 3 and FORM.dim == 6
    assert FORM.delta == -27 * (-1) * 2 * Fraction(5, 3)
    assert FORM.norm_target == 2 * Fraction(5, 3)
    assert FORM.has_weight_two_signature()
    J = FORM.phi_matrix()
    for i in range(6):
        for j in range(6):
            square = sum(J[i][k] * J[k][j] for k in range(6))
            assert square == (-FORM.d if i == j else 0)
    with pytest.raises(InputError):
        QuadFormDiag(4, (-1, ))
    with pytest.raises(InputError):
        QuadFormDiag(1, (0, 1))


def test_form_io(tmp_path):
    assert form_from_dict(FORM.to_dict()) == FORM
    assert form_from_dict({'d': 3, 'diag': [-1, '2', '5/3']}) == FORM
    path = tmp_path / 'form.yaml'
    path.write_text('d: 3\ndiag: ["-1", "2", "5/3"]\n')
    assert load_form(str(path)) == FORM
    for data in ({'d': 3}, {'d': '1/2', 'diag': [1]}, {'d': 3, 'diag': 'x'},
                 {'d': 3, 'diag': ['one']}):
        with pytest.raises(ParseError):
            form_from_dict(data)


def test_k_coefficients():
    root = QuadElem(0, 1, FORM.d)
    x = generator(FORM, 1) * root + generator(FORM, 2)
    assert x.ring == 'K'
    assert x.conj() + x == generator(FORM, 2) * 2
    with pytest.raises(ValueError):
        CliffordElem(FORM, {1: root}, 'Q')

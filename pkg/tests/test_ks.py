import pytest

from hodgepack.clifford import QuadFormDiag
from hodgepack.exception import (InconsistentInputError, InputError,
                                 TableValidationError)
from hodgepack.field import CMType
from hodgepack.hodge import (HodgeTable, conjugate_type, half_twist,
                             k_minus_half, weight_two_table)
from hodgepack.ks import (binomial, check_S0_tensor_S1, check_weight_two,
                          full_report, summand_dims, summand_table)


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


@pytest.mark.parametrize('m', range(1, 17))
def test_summand_dims(m):
    V = weight_two_table(m)
    assert check_weight_two(V) == m
    for i in range(m + 1):
        assert summand_dims(V, i) == (binomial(m - 1, i - 1),
                                      binomial(m - 1, i))
        S = summand_table(V, i)
        assert S.weight == 1
        assert S.dim_q() == summand_table(V, m - i).dim_q() == \
            2 * binomial(m, i)


def test_summand_examples():
    V = weight_two_table(10)
    assert summand_table(V, 1) == half_twist(V, 1)
    assert summand_dims(V, 1) == (1, 9)
    assert summand_table(V, 10) == k_minus_half()
    assert conjugate_type(summand_table(V, 0)) == \
        k_minus_half(CMType.standard(1).complement())
    with pytest.raises(InputError):
        summand_table(V, 11)


def test_S0_tensor_S1():
    for m in (2, 3, 7):
        assert check_S0_tensor_S1(weight_two_table(m))
    broken = HodgeTable(CMType.standard(1), 2, {(1, 2, 0): 1, (2, 0, 2): 2})
    with pytest.raises(TableValidationError):
        check_S0_tensor_S1(broken)


def test_check_weight_two_errors():
    V = weight_two_table(3)
    with pytest.raises(InputError) as info:
        check_weight_two(conjugate_type(V))
    assert 'CM-type' in str(info.value)
    with pytest.raises(InputError):
        check_weight_two(half_twist(V, -1))


def test_report_k3_instance():
    form = QuadFormDiag(3, (-1, ) + (1, ) * 9)
    report = full_report(form, weight_two_table(10))
    assert report.dim_V == 20
    assert (report.h20, report.h11) == (1, 18)
    assert [part.dim for part in report.parts] == \
        [2, 20, 90, 240, 420, 504, 420, 240, 90, 20, 2]
    assert report.parts[1].hodge == [1, 9]
    assert report.ball_dim == 9
    assert report.signature == [9, 1]
    assert report.multiplicity == 2**8
    assert report.exact is None
    data = report.to_dict()
    assert data['delta'] == str(form.delta)
    assert 'ball dimension: 9' in str(report)


def test_report_exact_m2():
    form = QuadFormDiag(1, (-1, 1))
    report = full_report(form, weight_two_table(2), 'exact')
    assert report.delta == 1
    assert report.center_square == 1
    assert report.split
    assert report.witness == [1, 0]
    assert report.exact['dims'] == [2, 4, 2]
    assert report.exact['dim_S'] == 8
    assert report.exact['commutant_dims'] == [2, 4, 2]
    assert report.exact['idempotent_rank'] == 2
    assert report.form_algebra['equivalent']


def test_report_exact_m3():
    form = QuadFormDiag(2, (-1, 1, 3))
    report = full_report(form, weight_two_table(3), 'exact')
    assert report.exact['endo'] == ['K'] * 4
    assert [part.endo for part in report.parts] == ['K'] * 4


def test_report_non_split():
    form = QuadFormDiag(3, (-1, 2))
    report = full_report(form, weight_two_table(2))
    assert not report.split
    assert report.witness is None
    assert report.parts[1].endo == 'D non-split'
    assert report.form_algebra['skew_field']


def test_report_input_errors():
    form = QuadFormDiag(3, (-1, 1))
    with pytest.raises(InconsistentInputError):
        full_report(form, weight_two_table(3))
    with pytest.raises(InconsistentInputError):
        full_report(QuadFormDiag(3, (1, 1)), weight_two_table(2))
    with pytest.raises(InputError):
        full_report(form, weight_two_table(2), 'slow')
    with pytest.raises(InputError):
        full_report(QuadFormDiag(1, (-1, ) + (1, ) * 5), weight_two_table(6),
                    'exact')

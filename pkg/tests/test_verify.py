import os

import pytest

from hodgepack.exception import DiscrepancyError
from hodgepack.launch.main import DEFAULTS
from hodgepack.utils import io
from hodgepack.utils.config import Config
from hodgepack.verify import (Check, Checks, Verifier, default_checks,
                              expect, grid_forms, split_forms)


class Squares(Check):
    name = 'squares'

    def _cases(self):
        return range(5)

    def _run_case(self, n):
        expect('square', n * n, n**2 + (1 if n == 3 else 0), n=n)

    def _finalize(self):
        return {'largest': 16}


class Empty(Check):
    name = 'empty'

    def _cases(self):
        return []


def small_configs(**overrides):
    configs = Config(DEFAULTS)
    configs.update([f'{key}={value}' for key, value in overrides.items()])
    return configs


def test_expect():
    expect('x', 1, 1)
    with pytest.raises(DiscrepancyError) as info:
        expect('x', 1, 2, case='a')
    assert 'case=a' in str(info.value)


def test_verifier_collects_failures(tmp_path):
    verifier = Verifier(small_configs(), seed=5)
    summary = verifier.run_with_defaults([Squares(), Empty()],
                                         save_dir=str(tmp_path))
    assert not summary.passed
    result = summary['squares']
    assert result.cases == 5
    assert len(result.failures) == 1
    assert result.failures[0].startswith('3:')
    assert result.details == {'largest': 16}
    assert summary['empty'].passed

    records = io.load(os.path.join(str(tmp_path), 'results.jsonl'))
    assert [record['name'] for record in records] == ['squares', 'empty']
    assert records[0]['seed'] == '5'
    assert records[0]['passed'] is False


def test_checks_select():
    checks = Checks(default_checks())
    assert [check.name for check in checks] == [
        'clifford', 'spin-dims', 'endo', 'invariance', 'split', 'twists',
        'tensor', 'theorem', 'k3', 'polarization'
    ]
    assert [check.name for check in checks.select(['k3', 'split'])] == \
        ['split', 'k3']
    with pytest.raises(ValueError):
        checks.select(['missing'])
    with pytest.raises(ValueError):
        Checks([Squares(), Squares()])


def test_forms():
    forms = grid_forms()
    assert len(forms) == 4 * 4 * 3
    assert all(form.has_weight_two_signature() for form in forms)
    assert len(split_forms()) >= 10
    assert all(form.m % 4 == 2 for form in split_forms())


def test_fast_suites():
    configs = small_configs(**{
        'selftest.tables': 20,
        'selftest.pairs': 20,
        'selftest.theorem_max_m': 8,
        'exact.max_m': 3
    })
    checks = Checks(default_checks()).select(
        ['split', 'twists', 'tensor', 'theorem', 'k3'])
    summary = Verifier(configs, seed=1).run(checks)
    for name, result in summary.items():
        assert result.passed, (name, result.failures)
    assert summary['twists'].cases == 20
    assert summary['split'].details == {'reciprocity_pairs': 20}


def test_clifford_suite_subset():
    check = Checks(default_checks()).select(['clifford'])[0]
    check.set_verifier(Verifier(small_configs()))
    for form in check.cases()[:6]:
        check.run_case(form)

import os
from fractions import Fraction

import pytest

from hodgepack.exception import ParseError
from hodgepack.utils import fs, humanize, io
from hodgepack.utils.config import Config
from hodgepack.utils.rationals import (format_value, is_rational_square,
                                       squarefree_part, to_fraction)


def test_config_update_and_select():
    configs = Config({'bound': 50, 'exact': {'max_m': 5}})
    assert configs.bound == 50
    assert isinstance(configs.exact, Config)
    configs.update(['exact.max_m=6', '--seed', '3', 'oracle.tolerance=1e-6',
                    'level=exact'])
    assert configs.exact.max_m == 6
    assert configs.seed == 3
    assert configs.select('oracle.tolerance') == 1e-6
    assert configs.level == 'exact'
    assert configs.select('missing.key', 'x') == 'x'
    assert configs.dict()['exact'] == {'max_m': 6}
    with pytest.raises(AttributeError):
        configs.missing


def test_config_hash_and_load(tmp_path):
    path = tmp_path / 'run.yaml'
    path.write_text('bound: 7\nselftest:\n  tables: 10\n')
    configs = Config({'bound': 50, 'selftest': {'tables': 200, 'pairs': 500}})
    before = configs.hash()
    configs.load(str(path))
    assert configs.bound == 7
    assert configs.selftest.tables == 10
    assert configs.selftest.pairs == 500
    assert configs.hash() != before
    assert 'tables: 10' in str(configs)
    with pytest.raises(FileNotFoundError):
        configs.load(str(tmp_path / 'missing.yaml'))


@pytest.mark.parametrize('name, text', [
    ('broken.yaml', 'bound: [1, 2\n'),
    ('broken.json', '{"bound": '),
    ('options.txt', 'bound: 3\n'),
    ('list.yaml', '- 1\n- 2\n'),
])
def test_config_load_errors(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    configs = Config({'bound': 50})
    with pytest.raises(ParseError):
        configs.load(str(path))
    assert configs.bound == 50


def test_io_round_trip(tmp_path):
    data = {'b': [1, 2], 'a': {'c': 'x'}}
    for name in ('data.json', 'data.yaml', 'nested/data.yml'):
        path = str(tmp_path / name)
        io.save(path, data)
        assert io.load(path) == data
    path = str(tmp_path / 'rows.jsonl')
    io.save(path, [data, data])
    assert io.load(path) == [data, data]
    assert io.dumps(data) == '{\n  "a": {\n    "c": "x"\n  },\n' \
        '  "b": [\n    1,\n    2\n  ]\n}\n'
    with pytest.raises(NotImplementedError):
        io.load(str(tmp_path / 'data.npy'))


def test_load_document(tmp_path):
    path = tmp_path / 'form.txt'
    path.write_text('{"d": 1}')
    assert io.load_document(str(path)) == {'d': 1}
    path.write_text('not json')
    with pytest.raises(ParseError):
        io.load_document(str(path))
    with pytest.raises(ParseError):
        io.load_document(str(tmp_path / 'missing.json'))


def test_fs(tmp_path):
    path = str(tmp_path / 'a' / 'b')
    fs.makedir(path)
    assert os.path.isdir(path)
    fs.makedir('')
    assert fs.normpath('a//b/../c') == os.path.join('a', 'c')


def test_humanize():
    assert humanize.plural(1, 'check') == '1 check'
    assert humanize.plural(3, 'check') == '3 checks'
    assert humanize.naturaldelta(0.5) == '500 ms'
    assert humanize.naturaldelta(12) == '12 seconds'
    assert humanize.naturaldelta(3725) == '1 hour 2 minutes 5 seconds'
    with pytest.raises(ValueError):
        humanize.naturaldelta(-1)


def test_to_fraction():
    assert to_fraction('3/6') == Fraction(1, 2)
    assert to_fraction(' -4 ') == -4
    assert to_fraction(7) == 7
    assert to_fraction(Fraction(2, 3)) == Fraction(2, 3)
    for value in ('1/0', 'x', 0.5, True, None, [1]):
        with pytest.raises(ParseError):
            to_fraction(value)


def test_rational_helpers():
    assert format_value({'x': Fraction(1, 3), 'y': [1, True, None],
                         2: 'z'}) == {'x': '1/3', 'y': ['1', True, None],
                                      '2': 'z'}
    assert is_rational_square(Fraction(4, 9))
    assert not is_rational_square(Fraction(2, 9))
    assert not is_rational_square(-1)
    assert squarefree_part(Fraction(-12, 5)) == -15
    assert squarefree_part(18) == 2
    with pytest.raises(ValueError):
        squarefree_part(0)

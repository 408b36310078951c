import json

import pytest

from hodgepack.hodge import (dumps_table, k_minus_half, load_table,
                             trivial_table, weight_two_table)
from hodgepack.launch import main
from hodgepack.launch.main import build_configs, build_parser


@pytest.fixture
def files(tmp_path):
    paths = {}

    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        paths[name] = str(path)
        return str(path)

    write('k.json', dumps_table(trivial_table()))
    write('v2.json', dumps_table(weight_two_table(2)))
    write('v3.json', dumps_table(weight_two_table(3)))
    write('form2.json', json.dumps({'d': 1, 'diag': ['-1', '1']}))
    write('broken.json', json.dumps({
        'half_degree': 1,
        'cm_type': [1],
        'weight': 2,
        'entries': [{'embedding': 1, 'p': 2, 'q': 0, 'dim': 1},
                    {'embedding': 2, 'p': 0, 'q': 2, 'dim': 2}]
    }))
    write('malformed.json', '{"half_degree": 1')
    paths['dir'] = str(tmp_path)
    return paths


def test_validate(files, capsys):
    assert main(['validate', files['k.json']]) == 0
    assert main(['validate', files['broken.json']]) == 1
    assert 'mult(2, 0, 2)' in capsys.readouterr().out
    assert main(['validate', files['malformed.json']]) == 2
    assert main(['validate', files['dir'] + '/missing.json']) == 2


def test_twist(files, capsys):
    out = files['dir'] + '/out/k-half.json'
    assert main(['twist', files['k.json'], '-1', '--out', out]) == 0
    assert load_table(out) == k_minus_half()
    assert main(['twist', files['k.json'], '1']) == 1
    capsys.readouterr()
    assert main(['tate', files['k.json'], '0']) == 0
    with open(files['k.json']) as fd:
        assert capsys.readouterr().out == fd.read()


def test_transforms_reject_invalid_tables(files, capsys):
    for argv in (['twist', files['broken.json'], '-1'],
                 ['tate', files['broken.json'], '1'],
                 ['ext', files['broken.json'], '1'],
                 ['tensor-k', files['broken.json']]):
        assert main(argv) == 2
        assert capsys.readouterr().out == ''
    assert main(['twist', files['malformed.json'], '-1']) == 2


def test_ext_and_tensor(files, capsys):
    assert main(['ext', files['v3.json'], '1']) == 0
    assert capsys.readouterr().out == dumps_table(weight_two_table(3))
    assert main(['tensor-k', files['k.json']]) == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data) == {'diag', 'conj'}
    assert data['diag']['weight'] == 1


def test_ks(files, capsys):
    out = files['dir'] + '/report.json'
    assert main(['ks', files['form2.json'], files['v2.json'], '--level',
                 'exact', '--out', out]) == 0
    assert 'Kuga-Satake report (level exact)' in capsys.readouterr().out
    with open(out) as fd:
        report = json.load(fd)
    assert report['exact']['dims'] == ['2', '4', '2']
    assert report['witness'] == ['1', '0']
    assert main(['ks', files['form2.json'], files['v3.json']]) == 2


def test_quat(files, capsys):
    assert main(['quat', '-3', '2']) == 0
    assert 'non-split' in capsys.readouterr().out
    out = files['dir'] + '/quat.json'
    assert main(['quat', '-1', '2', '--out', out]) == 0
    with open(out) as fd:
        data = json.load(fd)
    assert data['split'] is True
    assert data['witness'] == ['1', '1']
    assert main(['quat', '1', '7']) == 0
    assert main(['quat', '0', '7']) == 2
    assert main(['quat', 'x', '7']) == 2


def test_configs(files):
    parser = build_parser()
    args, opts = parser.parse_known_args(
        ['quat', '1', '2', '--bound', '9', 'selftest.pairs=3'])
    assert opts == ['selftest.pairs=3']
    configs = build_configs(args, opts)
    assert configs.bound == 9
    assert configs.selftest.pairs == 3
    assert configs.selftest.tables == 200

    args, opts = parser.parse_known_args(['quat', '1', '2', 'bound=0'])
    with pytest.raises(ValueError):
        build_configs(args, opts)
    assert main(['quat', '1', '2', 'seed']) == 2
    assert main(['quat', '1', '2', 'level=slow']) == 2


def test_bad_config_files(files, tmp_path):
    broken = tmp_path / 'broken.yaml'
    broken.write_text('bound: [1, 2\n')
    assert main(['quat', '1', '2', '--config', str(broken)]) == 2
    unknown = tmp_path / 'options.txt'
    unknown.write_text('bound: 3\n')
    assert main(['quat', '1', '2', '--config', str(unknown)]) == 2
    listing = tmp_path / 'list.yaml'
    listing.write_text('- 1\n- 2\n')
    assert main(['quat', '1', '2', '--config', str(listing)]) == 2
    assert main(['quat', '1', '2', '--config',
                 str(tmp_path / 'missing.yaml')]) == 2


def test_selftest(files):
    out = files['dir'] + '/run'
    assert main(['selftest', '--only', 'k3', '--only', 'theorem',
                 'selftest.theorem_max_m=4', 'exact.max_m=2', '--out',
                 out]) == 0
    with open(out + '/summary/results.jsonl') as fd:
        names = [json.loads(line)['name'] for line in fd]
    assert names == ['theorem', 'k3']
    assert main(['selftest', '--only', 'missing']) == 2

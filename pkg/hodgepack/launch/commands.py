import os
import sys
from typing import Any, Dict, List, Optional

from hodgepack.clifford import load_form
from hodgepack.exception import InconsistentInputError
from hodgepack.hodge import (HodgeTable, dumps_table, ext_power_K, half_twist,
                             load_table, table_to_dict, tate_twist,
                             tensor_K_halfmodule, validate)
from hodgepack.ks import full_report
from hodgepack.quat import QuatAlg, conic_point_search
from hodgepack.utils import fs, io
from hodgepack.utils.config import Config
from hodgepack.utils.logging import add_file_sink, logger
from hodgepack.utils.rationals import format_value, to_fraction
from hodgepack.verify import Checks, Verifier, default_checks

__all__ = [
    'emit', 'load_valid_table', 'cmd_validate', 'cmd_twist', 'cmd_tate',
    'cmd_ext', 'cmd_tensor_k', 'cmd_ks', 'cmd_quat', 'cmd_selftest'
]


def emit(text: str, out: Optional[str] = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    io.write_text(fs.normpath(out), text)
    logger.info(f'Wrote "{out}".')


def load_valid_table(path: str) -> HodgeTable:
    table = load_table(path)
    report = validate(table)
    if not report.passed:
        raise InconsistentInputError(
            f'"{path}" is not a valid Hodge table:\n{report}')
    return table


def cmd_validate(path: str) -> int:
    report = validate(load_table(path))
    print(report)
    return 0 if report.passed else 1


def cmd_twist(path: str, n: int, out: Optional[str] = None) -> int:
    emit(dumps_table(half_twist(load_valid_table(path), n)), out)
    return 0


def cmd_tate(path: str, n: int, out: Optional[str] = None) -> int:
    emit(dumps_table(tate_twist(load_valid_table(path), n)), out)
    return 0


def cmd_ext(path: str, i: int, out: Optional[str] = None) -> int:
    emit(dumps_table(ext_power_K(load_valid_table(path), i)), out)
    return 0


def cmd_tensor_k(path: str, out: Optional[str] = None) -> int:
    diag, conj = tensor_K_halfmodule(load_valid_table(path))
    emit(io.dumps({'diag': table_to_dict(diag), 'conj': table_to_dict(conj)}),
         out)
    return 0


def cmd_ks(form_path: str, table_path: str, configs: Config) -> int:
    report = full_report(
        load_form(form_path),
        load_table(table_path),
        configs.level,
        configs.bound,
        max_exact_m=configs.select('exact.max_m', 5),
        allow_large=configs.select('exact.allow_large', False),
        max_invariance_m=configs.select('invariance.max_m', 4),
        witness_bound=configs.select('selftest.witness_bound', 200))
    print(report)
    if configs.out is not None:
        emit(io.dumps(report.to_dict()), configs.out)
    return 0


def cmd_quat(a: str, b: str, configs: Config) -> int:
    algebra = QuatAlg(to_fraction(a), to_fraction(b))
    symbols = algebra.symbols()
    split = algebra.is_split()
    witness = conic_point_search(algebra.a, algebra.b,
                                 configs.bound) if split else None

    texts = [f'{algebra}: {"split" if split else "non-split"}']
    texts.extend(f'  ({algebra.a}, {algebra.b})_{place} = {symbol:+d}'
                 for place, symbol in symbols.items())
    if witness is not None:
        texts.append(f'  witness: {algebra.a} X^2 + {algebra.b} Y^2 = 1 at '
                     f'(X, Y) = ({witness[0]}, {witness[1]})')
    elif split:
        logger.warning(f'no witness of height <= {configs.bound}.')
    print('\n'.join(texts))

    if configs.out is not None:
        data: Dict[str, Any] = {
            'a': algebra.a,
            'b': algebra.b,
            'symbols': {str(p): s for p, s in symbols.items()},
            'split': split,
            'witness': list(witness) if witness else None
        }
        emit(io.dumps(format_value(data)), configs.out)
    return 0


def cmd_selftest(configs: Config, only: Optional[List[str]] = None) -> int:
    checks = Checks(default_checks())
    if only:
        checks = checks.select(only)

    save_dir = None
    if configs.out is not None:
        fs.makedir(configs.out)
        add_file_sink(configs.out)
        save_dir = os.path.join(configs.out, 'summary')

    logger.info(f'Self-test seed: {configs.seed}.')
    logger.info(f'Configs:\n{configs}')
    summary = Verifier(configs, seed=configs.seed).run_with_defaults(
        checks, save_dir=save_dir)
    return 0 if summary.passed else 1

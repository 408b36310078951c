import argparse
from typing import List, Optional

from hodgepack.exception import InputError, MathematicalError
from hodgepack.launch import commands
from hodgepack.utils.config import Config
from hodgepack.utils.logging import logger

__all__ = ['DEFAULTS', 'build_parser', 'build_configs', 'main']

DEFAULTS = {
    'level': 'fast',
    'bound': 50,
    'seed': 0,
    'out': None,
    'exact': {
        'max_m': 5,
        'allow_large': False
    },
    'invariance': {
        'max_m': 4
    },
    'oracle': {
        'tolerance': 1e-9,
        'transports': 20
    },
    'selftest': {
        'tables': 200,
        'pairs': 500,
        'transports': 50,
        'witness_bound': 200,
        'theorem_max_m': 16
    }
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--level', choices=['fast', 'exact'])
    common.add_argument('--bound', type=int, help='witness search height.')
    common.add_argument('--seed', type=int, help='seed for randomized runs.')
    common.add_argument('--out', help='output path, defaults to stdout.')
    common.add_argument('--config', help='yaml file with run options.')

    parser = argparse.ArgumentParser(prog='hodgepack')
    subparsers = parser.add_subparsers(dest='command', required=True)

    sub = subparsers.add_parser('validate', parents=[common])
    sub.add_argument('table')
    for name, help in (('twist', 'half twist order n.'),
                       ('tate', 'Tate twist n.')):
        sub = subparsers.add_parser(name, parents=[common])
        sub.add_argument('table')
        sub.add_argument('n', type=int, help=help)
    sub = subparsers.add_parser('ext', parents=[common])
    sub.add_argument('table')
    sub.add_argument('i', type=int, help='exterior power over K.')
    sub = subparsers.add_parser('tensor-k', parents=[common])
    sub.add_argument('table')
    sub = subparsers.add_parser('ks', parents=[common])
    sub.add_argument('form')
    sub.add_argument('table')
    sub = subparsers.add_parser('quat', parents=[common])
    sub.add_argument('a')
    sub.add_argument('b')
    sub = subparsers.add_parser('selftest', parents=[common])
    sub.add_argument('--only',
                     action='append',
                     help='run only the named check; may repeat.')
    return parser


def build_configs(args: argparse.Namespace, opts: List[str]) -> Config:
    configs = Config(DEFAULTS)
    if args.config:
        configs.load(args.config)
    for key in ('level', 'bound', 'seed', 'out'):
        value = getattr(args, key)
        if value is not None:
            configs[key] = value
    configs.update(opts)

    if configs.level not in ('fast', 'exact'):
        raise InputError(f'level must be "fast" or "exact", '
                         f'got "{configs.level}".')
    if not isinstance(configs.bound, int) or configs.bound < 1:
        raise InputError(f'bound must be a positive integer, '
                         f'got {configs.bound!r}.')
    return configs


def dispatch(args: argparse.Namespace, configs: Config) -> int:
    out = configs.out
    if args.command == 'validate':
        return commands.cmd_validate(args.table)
    if args.command == 'twist':
        return commands.cmd_twist(args.table, args.n, out)
    if args.command == 'tate':
        return commands.cmd_tate(args.table, args.n, out)
    if args.command == 'ext':
        return commands.cmd_ext(args.table, args.i, out)
    if args.command == 'tensor-k':
        return commands.cmd_tensor_k(args.table, out)
    if args.command == 'ks':
        return commands.cmd_ks(args.form, args.table, configs)
    if args.command == 'quat':
        return commands.cmd_quat(args.a, args.b, configs)
    return commands.cmd_selftest(configs, args.only)


def main(argv: Optional[List[str]] = None) -> int:
    # unrecognized arguments are key=value overrides
    args, opts = build_parser().parse_known_args(argv)
    try:
        return dispatch(args, build_configs(args, opts))
    except MathematicalError as e:
        logger.error(f'{type(e).__name__}: {e}')
        return 1
    except (InputError, ValueError, FileNotFoundError) as e:
        logger.error(f'{type(e).__name__}: {e}')
        return 2

from typing import Any, Dict, TextIO, Union

from hodgepack.exception import ParseError
from hodgepack.field import CMFieldDescriptor, CMType
from hodgepack.hodge.table import HodgeTable
from hodgepack.utils import io
from hodgepack.utils.rationals import to_fraction

__all__ = [
    'parse_integer', 'table_from_dict', 'table_to_dict',
    'load_table', 'save_table', 'dumps_table'
]


def parse_integer(value: Any, name: str) -> int:
    number = to_fraction(value)
    if number.denominator != 1:
        raise ParseError(f'{name} must be an integer, got {value!r}.')
    return number.numerator


def table_from_dict(data: Any) -> HodgeTable:
    if not isinstance(data, dict):
        raise ParseError('a Hodge table must be an object.')
    for key in ('half_degree', 'cm_type', 'weight', 'entries'):
        if key not in data:
            raise ParseError(f'Hodge table is missing "{key}".')
    if not isinstance(data['cm_type'], list) or \
            not isinstance(data['entries'], list):
        raise ParseError('"cm_type" and "entries" must be lists.')

    descriptor = CMFieldDescriptor(
        parse_integer(data['half_degree'], 'half_degree'))
    cm_type = CMType.from_indices(
        descriptor, [parse_integer(j, 'cm_type') for j in data['cm_type']])
    weight = parse_integer(data['weight'], 'weight')

    mult = {}
    for entry in data['entries']:
        if not isinstance(entry, dict):
            raise ParseError(f'table entry {entry!r} is not an object.')
        try:
            key = tuple(
                parse_integer(entry[name], name)
                for name in ('embedding', 'p', 'q'))
            dim = parse_integer(entry['dim'], 'dim')
        except KeyError as e:
            raise ParseError(f'table entry {entry} is missing {e}.') from e
        if key in mult:
            raise ParseError(f'table lists {key} twice.')
        mult[key] = dim

    effective = data.get('effective')
    if effective is not None and not isinstance(effective, bool):
        raise ParseError('"effective" must be a boolean.')
    return HodgeTable(cm_type, weight, mult, effective=effective)


def table_to_dict(t: HodgeTable) -> Dict[str, Any]:
    return {
        'half_degree': t.field.half_degree,
        'cm_type': list(t.cm_type.selection),
        'weight': t.weight,
        'effective': t.effective,
        'entries': [{
            'embedding': j,
            'p': p,
            'q': q,
            'dim': n
        } for (j, p, q), n in t.items()]
    }


def load_table(fpath: str) -> HodgeTable:
    return table_from_dict(io.load_document(fpath))


def dumps_table(t: HodgeTable) -> str:
    return io.dumps(table_to_dict(t))


def save_table(f: Union[str, TextIO], t: HodgeTable) -> None:
    io.write_text(f, dumps_table(t))

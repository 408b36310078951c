import json
import os
from typing import IO, Any, Callable, Dict, List, Tuple, Union

import yaml

from hodgepack.exception import ParseError
from hodgepack.utils import fs

__all__ = ['load', 'save', 'dumps', 'write_text', 'load_document']


def dumps(obj: Any) -> str:
    """
    Canonical JSON text: sorted keys, two-space indent, trailing newline.
    """
    return json.dumps(obj, indent=2, sort_keys=True) + '\n'


def _loads_jsonl(text: str) -> List[Any]:
    return [json.loads(row) for row in text.splitlines() if row.strip()]


def _dumps_jsonl(rows: Any) -> str:
    return ''.join(json.dumps(row, sort_keys=True) + '\n' for row in rows)


def _dumps_yaml(obj: Any) -> str:
    return yaml.safe_dump(obj, default_flow_style=False, sort_keys=True)


_Codec = Tuple[Callable[[str], Any], Callable[[Any], str]]

# yapf: disable
_codecs: Dict[str, _Codec] = {
    '.json': (json.loads, dumps),
    '.jsonl': (_loads_jsonl, _dumps_jsonl),
    '.yml': (yaml.safe_load, _dumps_yaml),
    '.yaml': (yaml.safe_load, _dumps_yaml),
}
# yapf: enable


def _codec(fpath: str, action: str) -> _Codec:
    suffix = os.path.splitext(fpath)[1].lower()
    if suffix not in _codecs:
        raise NotImplementedError(f'"{fpath}" cannot be {action}.')
    return _codecs[suffix]


def load(fpath: str) -> Any:
    loads, _ = _codec(fpath, 'loaded')
    with open(fpath, 'r') as fd:
        return loads(fd.read())


def save(fpath: str, obj: Any) -> None:
    _, dump = _codec(fpath, 'saved')
    write_text(fpath, dump(obj))


def write_text(f: Union[str, IO], text: str) -> None:
    if not isinstance(f, str):
        f.write(text)
        return
    fs.makedir(os.path.dirname(f))
    with open(f, 'w') as fd:
        fd.write(text)


def load_document(fpath: str) -> Any:
    """
    Reads a JSON or YAML input document; unknown extensions are read as JSON.
    """
    try:
        try:
            return load(fpath)
        except NotImplementedError:
            with open(fpath, 'r') as fd:
                return json.load(fd)
    except (OSError, ValueError, yaml.YAMLError) as e:
        raise ParseError(f'cannot read "{fpath}": {e}') from e

import hashlib
import os
from ast import literal_eval
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

import yaml
from multimethod import multimethod

from hodgepack.exception import ParseError
from hodgepack.utils import io

__all__ = ['Config']


def _parse_value(text: str) -> Any:
    try:
        return literal_eval(text)
    except (ValueError, SyntaxError):
        # bare words such as `exact` or `3/2` stay strings
        return text


def _parse_opts(opts: Union[List, Tuple]) -> Iterator[Tuple[str, Any]]:
    queue = list(opts)
    while queue:
        opt = queue.pop(0)
        if opt.startswith('--'):
            opt = opt[2:]
        if '=' in opt:
            key, text = opt.split('=', 1)
        elif queue:
            key, text = opt, queue.pop(0)
        else:
            raise ValueError(f'option "{opt}" has no value.')
        yield key, _parse_value(text)


class Config(dict):
    """
    Nested run options with attribute access. Dotted keys such as
    `exact.max_m` address nested sections in `set`, `select` and in
    command-line overrides.
    """

    def __init__(self, defaults: Optional[Dict[str, Any]] = None) -> None:
        super().__init__()
        if defaults:
            self.update(defaults)

    def __getattr__(self, key: str) -> Any:
        if key not in self:
            raise AttributeError(key)
        return self[key]

    def __setattr__(self, key: str, value: Any) -> None:
        self[key] = value

    def __delattr__(self, key: str) -> None:
        del self[key]

    def load(self, fpath: str) -> None:
        if not os.path.exists(fpath):
            raise FileNotFoundError(fpath)
        try:
            contents = io.load(fpath)
        except NotImplementedError as e:
            raise ParseError(str(e)) from e
        except (OSError, ValueError, yaml.YAMLError) as e:
            raise ParseError(f'cannot read "{fpath}": {e}') from e
        if contents is None:
            return
        if not isinstance(contents, dict):
            raise ParseError(f'"{fpath}" must hold a mapping of options.')
        self.update(contents)

    @multimethod
    def update(self, other: Dict) -> None:
        for key, value in other.items():
            if not isinstance(value, dict):
                self[key] = value
                continue
            section = self.get(key)
            if not isinstance(section, Config):
                section = self[key] = Config()
            section.update(value)

    @multimethod
    def update(self, opts: Union[List, Tuple]) -> None:
        for key, value in _parse_opts(opts):
            self.set(key, value)

    def set(self, key: str, value: Any) -> None:
        *path, leaf = key.split('.')
        section = self
        for name in path:
            section = section.setdefault(name, Config())
        section[leaf] = value

    def select(self, key: str, default: Any = None) -> Any:
        value = self
        for name in key.split('.'):
            if not isinstance(value, dict) or name not in value:
                return default
            value = value[name]
        return value

    def dict(self) -> Dict[str, Any]:
        return {
            key: value.dict() if isinstance(value, Config) else value
            for key, value in self.items()
        }

    def hash(self) -> str:
        return hashlib.sha256(str(self).encode()).hexdigest()

    def __str__(self) -> str:
        return yaml.safe_dump(self.dict(),
                              default_flow_style=False,
                              sort_keys=True).rstrip()

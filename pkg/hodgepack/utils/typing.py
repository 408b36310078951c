import typing
from fractions import Fraction
from typing import Dict, List, Union

__all__ = ['Logger', 'Rational', 'SparseVector', 'MatrixQ', 'MatrixK']

Logger = None

Rational = Union[int, Fraction]
SparseVector = Dict[int, Fraction]
MatrixQ = List[List[Fraction]]
MatrixK = List[List['QuadElem']]

# https://stackoverflow.com/questions/39740632/python-type-hinting-without-cyclic-imports
if typing.TYPE_CHECKING:
    from loguru import Logger
    from hodgepack.field import QuadElem

from .cmtype import *
from .quadratic import *

from .hermitian import *
from .matrix import *
from .subspace import *

from .decomposition import *
from .fbasis import *
from .unitary import *

from .algebra import *
from .hilbert import *

from .oracle import *
from .polarized import *

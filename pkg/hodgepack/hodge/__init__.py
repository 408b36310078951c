from .io import *
from .table import *
from .twists import *

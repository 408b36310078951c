from .report import *
from .summands import *

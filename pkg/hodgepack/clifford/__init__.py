from .center import *
from .element import *
from .form import *

from .check import *
from .runner import *
from .suites import *
from .summary import *
from .writers import *

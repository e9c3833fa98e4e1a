from .errors.handlers import *
from .errors.validation_error import *

from .const import *
from .utils import *

from .errors import *
from .logging_setup import setup_logging

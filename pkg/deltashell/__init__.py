from .utils.log import log
from .api import *

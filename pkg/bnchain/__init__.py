# flake8: noqa

from . import utils
from . import errors

from .core import *
from .tableau import *
from .construct import *
from .series import *
from .certify import *
from .documents import *

from .renderers import *
from .cli import run


__version__ = "0.1.0"
version_info = tuple(map(int, __version__.split(".")))

# flake8: noqa

from ._asciirenderer import AsciiRenderer, registry, register_ascii_render_function
from . import gridrender, textrender

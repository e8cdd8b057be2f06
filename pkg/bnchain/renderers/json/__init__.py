# flake8: noqa

from ._jsonrenderer import JsonRenderer, registry, register_json_render_function, encode
from . import encoders

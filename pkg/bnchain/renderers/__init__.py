# flake8: noqa

from ._base import Renderer, RenderFunctionRegistry
from .json import JsonRenderer, register_json_render_function
from .ascii import AsciiRenderer, register_ascii_render_function


RENDERERS = {"json": JsonRenderer, "ascii": AsciiRenderer}


def get_renderer(name):
    """Get a renderer instance by name ("json" or "ascii")."""
    try:
        return RENDERERS[name]()
    except KeyError:
        raise ValueError(
            f"Unknown renderer {name!r}, expected one of {sorted(RENDERERS)}."
        )

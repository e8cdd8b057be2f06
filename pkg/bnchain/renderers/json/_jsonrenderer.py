import json

from .._base import Renderer, RenderFunctionRegistry
from ...documents import FORMAT_VERSION


registry = RenderFunctionRegistry()


def register_json_render_function(cls):
    """Decorator to register a function that encodes objects of the given
    class as a JSON-compatible dict.
    """

    def _register_json_render_function(f):
        registry.register(cls, f)
        return f

    return _register_json_render_function


def encode(obj):
    """Get the JSON-compatible dict (or list) of a result object, without
    the version header. Nested objects are encoded with this function too.
    """
    func = registry.get_render_function(obj)
    if func is None:
        raise TypeError(f"Cannot encode {type(obj).__name__} objects as JSON.")
    return func(obj)


class JsonRenderer(Renderer):
    """A renderer that generates versioned JSON documents with sorted keys."""

    registry = registry

    def document(self, obj):
        """Get the document dict of obj, including the version header."""
        doc = self.get_render_function(obj)(obj)
        if isinstance(doc, dict):
            doc = dict(doc, format_version=FORMAT_VERSION)
        return doc

    def render(self, obj):
        """Render obj to a JSON string ending with a newline."""
        return json.dumps(self.document(obj), sort_keys=True, indent=2) + "\n"

from .._base import Renderer, RenderFunctionRegistry


registry = RenderFunctionRegistry()


def register_ascii_render_function(cls):
    """Decorator to register a function that renders objects of the given
    class as a list of text lines.
    """

    def _register_ascii_render_function(f):
        registry.register(cls, f)
        return f

    return _register_ascii_render_function


class AsciiRenderer(Renderer):
    """A renderer that generates plain text: aligned grids for fillings,
    tables for limit series and indented key/value text for the rest.
    """

    registry = registry

    def render(self, obj):
        """Render obj to text ending with a newline."""
        res = self.get_render_function(obj)(obj)
        if isinstance(res, str):
            res = [res]
        return "".join(line.rstrip() + "\n" for line in res)

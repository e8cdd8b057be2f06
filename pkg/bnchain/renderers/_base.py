class Renderer:
    """Base class for other renderers. A renderer takes a result object,
    selects a render function for it, and turns it into text.
    """

    registry = None

    def render(self, obj):
        raise NotImplementedError()

    def get_render_function(self, obj):
        func = self.registry.get_render_function(obj)
        if func is None:
            raise TypeError(
                f"{type(self).__name__} cannot render {type(obj).__name__} objects."
            )
        return func


class RenderFunctionRegistry:
    """A registry for render functions capable of rendering specific
    result classes. This registry allows for a plugin-like system for a
    renderer's capabilities.
    """

    def __init__(self):
        self._store = {}

    def register(self, cls, func):
        """Register a render function for the given class.

        When an object is rendered, the renderer selects a render function
        based on the object's class. The selection prioritizes more
        specialized classes, so a function registered for ``object`` acts
        as a catch-all.
        """

        # Check types
        if not isinstance(cls, type):
            raise TypeError(f"Expected a class, got {cls!r}.")
        if not callable(func):
            raise TypeError(f"Second argument must be a callable, not {func!r}")

        if cls in self._store:
            raise ValueError(f"Class {cls.__name__} can only be registered once.")
        self._store[cls] = func

    def get_render_function(self, obj):
        """Get the render function for the given object, based on the
        object's class. The behavior is similar to ``isinstance``; an
        instance of an unregistered subclass gets the function of its
        closest registered base class. Returns None if no function applies.
        """
        for cls in type(obj).mro():
            f = self._store.get(cls, None)
            if f is not None:
                return f
        return None

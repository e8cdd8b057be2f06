from . import register_ascii_render_function
from ..json import encode


def _is_scalar(value):
    return value is None or isinstance(value, (str, int, float, bool))


def _lines(value, indent):
    pad = "  " * indent
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if _is_scalar(item) or _is_flat(item):
                yield f"{pad}{key}: {_inline(item)}"
            else:
                yield f"{pad}{key}:"
                yield from _lines(item, indent + 1)
    elif isinstance(value, list):
        for item in value:
            if _is_scalar(item) or _is_flat(item):
                yield f"{pad}- {_inline(item)}"
            else:
                yield f"{pad}-"
                yield from _lines(item, indent + 1)
    else:
        yield f"{pad}{_inline(value)}"


def _is_flat(value):
    return isinstance(value, list) and all(
        _is_scalar(x) or (isinstance(x, list) and all(_is_scalar(y) for y in x))
        for x in value
    )


def _inline(value):
    if isinstance(value, list):
        return "[" + ", ".join(_inline(x) for x in value) + "]"
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


@register_ascii_render_function(object)
def text_renderer(obj):
    """Catch-all render function: indented key/value text of the JSON
    encoding of the object.
    """
    return list(_lines(encode(obj), 0))

from . import register_ascii_render_function
from ...series import LimitSeriesTable
from ...tableau import Filling, WeightedFilling


def _grid(rows):
    width = max((len(token) for row in rows for token in row), default=1)
    return [" ".join(token.rjust(width) for token in row) for row in rows]


@register_ascii_render_function(Filling)
def filling_renderer(f):
    """Render function for fillings: one right-aligned token per box, row 1
    on top. Repeated indices get a trailing star and are listed below the
    grid with all their boxes.
    """
    repeated = {record.index: record for record in f.repeats()}
    rows = [
        [f"{index}*" if index in repeated else str(index) for index in row]
        for row in f.rows()
    ]
    lines = _grid(rows)
    if repeated:
        lines.append("")
        for index, record in repeated.items():
            cells = " ".join(f"({r}, {c})" for r, c in record.occurrences)
            lines.append(f"{index}*: {cells}")
    return lines


@register_ascii_render_function(WeightedFilling)
def weighted_filling_renderer(w):
    """Render function for weighted fillings: each box lists its entries,
    with a minus sign for weight -1. Rows outside the rectangle are
    marked with a '|' on the left.
    """
    entries = w.entries
    row_numbers = sorted({row for row, _ in entries} | set(range(1, w.beta + 1)))
    rows = []
    for row in row_numbers:
        tokens = []
        for col in range(1, w.alpha + 1):
            items = entries.get((row, col), ())
            parts = [str(i) if weight > 0 else f"-{i}" for i, weight in items]
            tokens.append(",".join(parts) or ".")
        rows.append(tokens)
    lines = _grid(rows)
    return [
        ("  " if 1 <= row <= w.beta else "| ") + line
        for row, line in zip(row_numbers, lines)
    ]


@register_ascii_render_function(LimitSeriesTable)
def series_renderer(table):
    """Render function for limit series: one line per component with the
    vanishing orders at both nodes and the line bundle.
    """
    g, r, d = table.p.triple
    lines = [f"g={g} r={r} d={d}"]
    rows = []
    for i in range(1, g + 1):
        u, v = table.vanishing(i)
        torsion = table.chain.torsion(i)
        rows.append(
            [
                str(i),
                " ".join(str(x) for x in u),
                " ".join(str(x) for x in v),
                str(table.bundle(i)),
                f"l={torsion}" if torsion else "",
            ]
        )
    widths = [max(len(row[n]) for row in rows) for n in range(4)]
    for i, u, v, bundle, torsion in rows:
        i = i.rjust(widths[0])
        u, v, bundle = u.ljust(widths[1]), v.ljust(widths[2]), bundle.ljust(widths[3])
        lines.append(f"{i} | u: {u} | v: {v} | {bundle} {torsion}")
    return lines

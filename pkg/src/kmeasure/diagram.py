"""ASCII Ferrers diagrams with an optional polygon outline.

Nodes are ``o``; a ``|`` closes each polygon row and ``-``/``+`` rules
mark the top and bottom edges. Polygon cells that fall outside the
diagram are drawn as ``.``.
"""

from __future__ import annotations

from kmeasure.statistics import PartsLike, PolygonShape, _parts


def _rule(width: int) -> str:
    return "-" * max(2 * width - 1, 0) + "+"


def render_ferrers(p: PartsLike, shape: PolygonShape | None = None) -> str:
    parts = list(_parts(p))
    rows_in_shape = len(shape.row_lengths) if shape else 0
    if not parts and not rows_in_shape:
        return "(empty)\n"
    lines = []
    if rows_in_shape:
        lines.append(_rule(shape.row_lengths[0]))
    for i in range(max(len(parts), rows_in_shape)):
        have = parts[i] if i < len(parts) else 0
        if i < rows_in_shape:
            w = shape.row_lengths[i]
            inside = ["o" if j < have else "." for j in range(w)]
            outside = ["o"] * max(have - w, 0)
            line = " ".join(inside) + "|" + " ".join(outside)
        else:
            line = " ".join(["o"] * have)
        lines.append(line.rstrip())
        if rows_in_shape and i == rows_in_shape - 1:
            lines.append(_rule(shape.row_lengths[-1]))
    return "\n".join(lines) + "\n"

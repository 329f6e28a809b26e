"""Minimal deterministic SVG 1.1 writer.

Hand-assembled markup with a fixed viewBox (5% margin around the reference
circle) and plain polyline/polygon/circle primitives only, so identical
inputs produce byte-identical files.  The y axis is flipped at write time to
keep mathematical orientation.
"""

from __future__ import annotations

from .serialize import fmt

MARGIN = 1.05
CIRCLE_STYLE = 'fill="none" stroke="#909090" stroke-dasharray="4 3"'
SHAPE_STYLE = 'fill="none" stroke="#c03028"'
CURVE_STYLE = 'fill="none" stroke="#2858c0"'
PATH_STYLE = 'fill="none" stroke="#288048"'


def _points_attr(points, digits: int = 9) -> str:
    return " ".join(f"{fmt(x, digits)},{fmt(-y, digits)}" for x, y in points)


def circle_element(radius: float, style: str = CIRCLE_STYLE, width: float = 1.0) -> str:
    return (f'<circle cx="0" cy="0" r="{fmt(radius, 9)}" {style} '
            f'stroke-width="{fmt(width, 4)}"/>')


def polygon_element(points, style: str = SHAPE_STYLE, width: float = 1.0) -> str:
    return (f'<polygon points="{_points_attr(points)}" {style} '
            f'stroke-width="{fmt(width, 4)}"/>')


def polyline_element(points, style: str = PATH_STYLE, width: float = 1.0) -> str:
    return (f'<polyline points="{_points_attr(points)}" {style} '
            f'stroke-width="{fmt(width, 4)}"/>')


def svg_document(elements, view_radius: float) -> str:
    """Wrap elements in an SVG with a square viewBox of half-size MARGIN*view_radius."""
    r = MARGIN * view_radius
    header = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="600" height="600" '
        f'viewBox="{fmt(-r, 9)} {fmt(-r, 9)} {fmt(2 * r, 9)} {fmt(2 * r, 9)}">')
    body = "\n".join(elements)
    return f"{header}\n{body}\n</svg>\n"


def stroke_width(view_radius: float) -> float:
    return 0.004 * MARGIN * view_radius


def write_svg(path, elements, view_radius: float) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg_document(elements, view_radius))

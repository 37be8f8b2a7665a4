"""Deterministic SVG rendering of instances and matchings.

One panel per labeled set: points at their positions (convex sets are
realized on a regular-like integer polygon), labels as text, matching
edges as straight segments.  Edges involved in a crossing within a panel
are drawn red.  Output depends only on the input, byte for byte.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .conflict import edges_cross_in_set
from .generators import convex_polygon_points
from .model import ConvexSet, Instance, LabeledSet, Matching

_PANEL = 320
_PAD = 36
_R = 4


def _panel_coords(s: LabeledSet) -> dict[int, tuple[int, int]]:
    """Map labels to integer panel coordinates (y grows downward in SVG)."""
    if isinstance(s, ConvexSet):
        poly = convex_polygon_points(max(3, s.n))
        raw = {lab: poly.coord(i + 1) for i, lab in enumerate(s.order)}
    else:
        raw = s.coords()
    xs = [p[0] for p in raw.values()]
    ys = [p[1] for p in raw.values()]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    w = max(1, maxx - minx)
    h = max(1, maxy - miny)
    side = _PANEL - 2 * _PAD
    out = {}
    for lab, p in raw.items():
        px = _PAD + (p[0] - minx) * side // w
        py = _PAD + (maxy - p[1]) * side // h  # flip: SVG y axis points down
        out[lab] = (int(px), int(py))
    return out


def render_instance(inst: Instance, matching: Optional[Matching] = None) -> str:
    """SVG document with one panel per set of the instance."""
    edges = matching.edges if matching is not None else ()
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_PANEL * inst.num_sets}" '
        f'height="{_PANEL}" viewBox="0 0 {_PANEL * inst.num_sets} {_PANEL}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for si, s in enumerate(inst.sets):
        off = si * _PANEL
        coords = _panel_coords(s)
        crossing: set[tuple[int, int]] = set()
        for e, f in itertools.combinations(edges, 2):
            if edges_cross_in_set(e, f, s):
                crossing.add(e)
                crossing.add(f)
        parts.append(f'<g transform="translate({off},0)">')
        parts.append(
            f'<rect x="1" y="1" width="{_PANEL - 2}" height="{_PANEL - 2}" '
            'fill="none" stroke="#ccc"/>'
        )
        parts.append(f'<text x="8" y="16" font-size="12" fill="#555">set {si + 1}</text>')
        for e in edges:
            (x1, y1), (x2, y2) = coords[e[0]], coords[e[1]]
            color = "#d40000" if e in crossing else "#000"
            parts.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                f'stroke="{color}" stroke-width="2"/>'
            )
        for lab in sorted(coords):
            x, y = coords[lab]
            parts.append(f'<circle cx="{x}" cy="{y}" r="{_R}" fill="#1f4e9c"/>')
            parts.append(
                f'<text x="{x + 6}" y="{y - 6}" font-size="11" fill="#000">{lab}</text>'
            )
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

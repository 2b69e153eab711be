"""SVG pictures of paths and polygons in the disc model.

Coordinates are floats and only used for drawing.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .core import ExtRational

SIZE = 400
RADIUS = 180


def disc_point(x: ExtRational) -> tuple[float, float]:
    """Image of x on the unit circle under z -> (iz + 1)/(z + i)."""
    if x.is_inf:
        return 0.0, 1.0
    z = x.num / x.den
    d = z * z + 1
    return 2 * z / d, (z * z - 1) / d


def _screen(pt):
    return SIZE / 2 + RADIUS * pt[0], SIZE / 2 - RADIUS * pt[1]


def geodesic(x: ExtRational, y: ExtRational) -> str:
    """SVG path data for the hyperbolic line between two boundary points."""
    P, Q = disc_point(x), disc_point(y)
    sx, sy = _screen(P)
    ex, ey = _screen(Q)
    dot = P[0] * Q[0] + P[1] * Q[1]
    if dot < -1 + 1e-9:
        return f"M {sx:.3f} {sy:.3f} L {ex:.3f} {ey:.3f}"
    cx, cy = (P[0] + Q[0]) / (1 + dot), (P[1] + Q[1]) / (1 + dot)
    r = math.hypot(cx - P[0], cy - P[1]) * RADIUS
    # the arc bows towards the centre of the disc
    cross = P[0] * Q[1] - P[1] * Q[0]
    sweep = 0 if cross > 0 else 1
    return f"M {sx:.3f} {sy:.3f} A {r:.3f} {r:.3f} 0 0 {sweep} {ex:.3f} {ey:.3f}"


def render_svg(
    path: Sequence[ExtRational] = (),
    edges: Iterable[tuple[ExtRational, ExtRational]] = (),
    title: str = "",
) -> str:
    """Circle, optional background edges in grey and a path in black with labels."""
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">'
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    c = SIZE / 2
    out.append(f'<circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black"/>')
    for x, y in edges:
        out.append(f'<path d="{geodesic(x, y)}" fill="none" stroke="#999"/>')
    for x, y in zip(path, path[1:]):
        out.append(f'<path d="{geodesic(x, y)}" fill="none" stroke="black" stroke-width="2"/>')
    seen = []
    for v in list(path) + [v for e in edges for v in e]:
        if v in seen:
            continue
        seen.append(v)
        px, py = disc_point(v)
        lx, ly = _screen((px * 1.08, py * 1.08))
        out.append(
            f'<text x="{lx:.3f}" y="{ly:.3f}" font-size="11" text-anchor="middle" '
            f'dominant-baseline="middle">{escape(str(v))}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

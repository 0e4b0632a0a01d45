"""Static SVG circle diagrams of a realizing orbit.

Output is a pure function of the orbit: no timestamps, fixed float format.
"""

from __future__ import annotations

import math
from fractions import Fraction
from xml.sax.saxutils import escape

from .realization import Orbit

SIZE = 420
RADIUS = 150
LABEL_RADIUS = 178


def _xy(x: Fraction, radius: float = RADIUS) -> tuple[str, str]:
    theta = 2 * math.pi * float(x)
    cx = SIZE / 2 + radius * math.cos(theta)
    cy = SIZE / 2 - radius * math.sin(theta)
    return f"{cx:.3f}", f"{cy:.3f}"


def orbit_svg(orbit: Orbit, title: str | None = None) -> str:
    """Unit circle with the orbit points labeled by numerator over ``k**q - 1``,
    the fixed points ``j/(k-1)`` of ``m_k`` in blue, and chords ``x_i -> x_sigma(i)``."""
    k, den = orbit.k, orbit.denominator
    sigma = orbit.cycle
    title = title or f"{sigma} under m_{k} (angles in multiples of 1/{den})"
    c = SIZE / 2
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE + 30}" '
        f'viewBox="0 0 {SIZE} {SIZE + 30}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="7" '
        'markerHeight="7" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="#555"/></marker>',
        "</defs>",
        f'<rect width="{SIZE}" height="{SIZE + 30}" fill="white"/>',
        f'<circle cx="{c:.3f}" cy="{c:.3f}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    for i, x in enumerate(orbit.points, start=1):
        x1, y1 = _xy(x)
        x2, y2 = _xy(orbit.points[sigma(i) - 1])
        lines.append(
            f'<line class="arrow" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#555" '
            'stroke-width="1" marker-end="url(#arrow)"/>'
        )
    for j in range(k - 1):
        fx, fy = _xy(Fraction(j, k - 1))
        lines.append(f'<circle class="fixed" cx="{fx}" cy="{fy}" r="5" fill="#1f5fd6"/>')
    for x, a in zip(orbit.points, orbit.numerators):
        px, py = _xy(x)
        lx, ly = _xy(x, LABEL_RADIUS)
        lines.append(f'<circle class="orbit" cx="{px}" cy="{py}" r="5" fill="#c0392b"/>')
        lines.append(
            f'<text x="{lx}" y="{ly}" font-family="sans-serif" font-size="13" '
            f'text-anchor="middle" dominant-baseline="middle">{a}</text>'
        )
    lines.append(
        f'<text x="{c:.3f}" y="{SIZE + 15}" font-family="sans-serif" font-size="13" '
        f'text-anchor="middle">{escape(title)}</text>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

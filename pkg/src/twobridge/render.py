"""Deterministic SVG drawings of the quotient cusp tiling.

Output is plain SVG 1.1 text assembled by hand: fixed decimal formatting and
index-ordered elements make repeated renders byte-identical. Clasp triangles
are shaded, meridional edges drawn heavy, and each vertex carries its label
and valence.
"""

from __future__ import annotations

from .cusp import CLASP, MERIDIONAL, CuspComplex

SCALE = 90
MARGIN = 40

_STYLE = (
    "text{font-family:Helvetica,Arial,sans-serif;}"
    ".edge{stroke:#444444;stroke-width:1.2;fill:none;}"
    ".merid{stroke:#b22222;stroke-width:3.0;fill:none;}"
    ".clasp{fill:#f2c9a0;stroke:none;}"
    ".tri{fill:#ffffff;stroke:none;}"
    ".vert{fill:#1f3552;}"
    ".lab{font-size:11px;fill:#1f3552;}"
    ".val{font-size:8px;fill:#777777;}"
)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_svg(cx: CuspComplex, copies_x: int = 1, copies_y: int = 1) -> str:
    """Draw copies_x x copies_y fundamental domains of the quotient torus."""
    px, py = cx.periods
    if copies_x <= 0 or copies_y <= 0:
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            'width="0" height="0">'
            f"<metadata>twobridge cusp tiling of {cx.word}; copies "
            f"{copies_x}x{copies_y}; nothing to draw</metadata></svg>"
        )

    width = copies_x * px * SCALE + 2 * MARGIN
    height = copies_y * py * SCALE + 2 * MARGIN

    def place(point, shift_x, shift_y):
        x = point[0] / cx.scale + shift_x * px
        y = point[1] + shift_y * py
        return (MARGIN + x * SCALE, height - MARGIN - y * SCALE)

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<metadata>twobridge cusp tiling of {cx.word}; epsilon={cx.epsilon}; "
        f"periods {px}x{py}; copies {copies_x}x{copies_y}</metadata>",
        f"<style>{_STYLE}</style>",
        f'<rect width="{width}" height="{height}" fill="#fbfbf8"/>',
    ]

    shifts = [(i, j) for j in range(copies_y) for i in range(copies_x)]

    for shift in shifts:
        for tri in cx.triangles:
            pts = " ".join(
                f"{_fmt(sx)},{_fmt(sy)}"
                for sx, sy in (place(p, *shift) for p in tri.corners)
            )
            css = "clasp" if tri.kind == CLASP else "tri"
            parts.append(f'<polygon class="{css}" points="{pts}"/>')

    for shift in shifts:
        for edge in cx.edges:
            (x1, y1), (x2, y2) = (place(p, *shift) for p in edge.segment)
            css = "merid" if edge.kind == MERIDIONAL else "edge"
            parts.append(
                f'<line class="{css}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
            )

    for shift in shifts:
        for vert in cx.vertices:
            sx, sy = place(vert.coords, *shift)
            parts.append(
                f'<circle class="vert" cx="{_fmt(sx)}" cy="{_fmt(sy)}" r="3"/>'
            )
            parts.append(
                f'<text class="lab" x="{_fmt(sx + 5)}" y="{_fmt(sy - 4)}">'
                f"{vert.label}</text>"
            )
            parts.append(
                f'<text class="val" x="{_fmt(sx + 5)}" y="{_fmt(sy + 9)}">'
                f"v{vert.valence}</text>"
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"

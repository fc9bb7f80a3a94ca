"""SVG drawing of the rich diagram: four boundary circles on a 2x2 grid."""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Tuple
from xml.sax.saxutils import escape

from .curves import BlueArc, Curve
from .diagram import Endpoint, RedArc, RichDiagram

__all__ = ["LAYERS", "parse_layers", "render_svg"]

LAYERS = ("circles", "red", "blue", "curves")
CURVE_COLORS = ("#1b9e77", "#7570b3", "#e6ab02")
CENTERS = {"Tl": (220.0, 200.0), "Tr": (580.0, 200.0), "Bl": (220.0, 560.0), "Br": (580.0, 560.0)}
RADIUS = 90.0
WIDTH, HEIGHT = 800, 760

Point = Tuple[float, float]


def parse_layers(text: str) -> Tuple[str, ...]:
    """Comma list of layer names, validated and deduplicated in input order."""
    out: List[str] = []
    for part in text.split(","):
        name = part.strip()
        if not name:
            continue
        if name not in LAYERS:
            raise ValueError(f"unknown layer {name!r}; choose from {','.join(LAYERS)}")
        if name not in out:
            out.append(name)
    if not out:
        raise ValueError("no layers selected")
    return tuple(out)


def _point(diagram: RichDiagram, e: Endpoint, r: float = RADIUS) -> Point:
    circle = diagram.circles[e.position]
    slot = circle.slots().index(e.label)
    # slot 0 at the top, following the circle's orientation clockwise
    angle = 2 * math.pi * slot / circle.size - math.pi / 2
    cx, cy = CENTERS[e.position]
    return cx + r * math.cos(angle), cy + r * math.sin(angle)


def _fmt(p: Point) -> str:
    return f"{p[0]:.1f},{p[1]:.1f}"


def _control(a: Point, b: Point) -> Point:
    # bow each chord away from the figure's center so bundles stay apart
    mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
    cx, cy = WIDTH / 2, HEIGHT / 2
    dx, dy = mx - cx, my - cy
    norm = math.hypot(dx, dy) or 1.0
    return mx + 40 * dx / norm, my + 40 * dy / norm


def _path(a: Point, b: Point) -> str:
    return f"M {_fmt(a)} Q {_fmt(_control(a, b))} {_fmt(b)}"


def _circles(diagram: RichDiagram) -> List[str]:
    out = ['<g id="circles" fill="none" stroke="#000" font-family="sans-serif" font-size="10">']
    for pos, circle in diagram.circles.items():
        cx, cy = CENTERS[pos]
        out.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{RADIUS:.1f}"/>')
        out.append(
            f'<text x="{cx:.1f}" y="{cy + 4:.1f}" text-anchor="middle" stroke="none" '
            f'fill="#000">{escape(pos)} {escape(circle.name)}</text>'
        )
        for j in circle.slots():
            x, y = _point(diagram, Endpoint(pos, j), RADIUS + 12)
            out.append(
                f'<text x="{x:.1f}" y="{y + 3:.1f}" text-anchor="middle" stroke="none" '
                f'fill="#000">{j}</text>'
            )
    out.append("</g>")
    return out


def _red(diagram: RichDiagram, arcs: Iterable[RedArc]) -> List[str]:
    out = ['<g id="red" fill="none" stroke="#d62728" stroke-width="1.5">']
    for arc in arcs:
        a, b = _point(diagram, arc.end1), _point(diagram, arc.end2)
        dash = ' stroke-dasharray="5,4"' if arc.depth == "back" else ""
        if arc.depth == "mixed":
            # back half at Bl, front half at Tl
            back, front = (a, b) if arc.end1.position == "Bl" else (b, a)
            mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            out.append(f'<path d="M {_fmt(back)} L {_fmt(mid)}" stroke-dasharray="5,4"/>')
            out.append(f'<path d="M {_fmt(mid)} L {_fmt(front)}"/>')
            continue
        out.append(f'<path d="{_path(a, b)}"{dash}/>')
    out.append("</g>")
    return out


def _blue(diagram: RichDiagram, blues: Iterable[BlueArc]) -> List[str]:
    out = ['<g id="blue" fill="none" stroke="#1f77b4" stroke-width="1">']
    for arc in blues:
        a, b = _point(diagram, arc.top), _point(diagram, arc.bottom)
        out.append(f'<path d="M {_fmt(a)} L {_fmt(b)}"/>')
        if arc.winding:
            mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
            out.append(f'<circle cx="{mx:.1f}" cy="{my:.1f}" r="5"/>')
            sign = "+" if arc.winding > 0 else "-"
            out.append(
                f'<text x="{mx + 8:.1f}" y="{my + 3:.1f}" font-size="9" stroke="none" '
                f'fill="#1f77b4">{sign}</text>'
            )
    out.append("</g>")
    return out


def _curves(diagram: RichDiagram, curves: List[Curve]) -> List[str]:
    out = ['<g id="curves" fill="none" stroke-width="3" stroke-opacity="0.5">']
    for k, curve in enumerate(curves):
        color = CURVE_COLORS[k % len(CURVE_COLORS)]
        parts = []
        for (s, e), blue in zip(curve.reds, curve.blues):
            a, b = _point(diagram, s), _point(diagram, e)
            parts.append(_path(a, b))
            nxt = _point(diagram, Endpoint(("B" if e.position[0] == "T" else "T") + e.position[1], e.label))
            parts.append(f"M {_fmt(b)} L {_fmt(nxt)}")
        out.append(f'<path id="curve{k}" stroke="{color}" d="{" ".join(parts)}"/>')
    out.append("</g>")
    return out


def render_svg(
    diagram: RichDiagram,
    blues: List[BlueArc],
    curves: List[Curve],
    layers: Iterable[str] = LAYERS,
) -> str:
    """The selected layers as one standalone SVG document."""
    chosen = set(layers)
    body: List[str] = []
    drawers: Dict[str, object] = {
        "circles": lambda: _circles(diagram),
        "red": lambda: _red(diagram, diagram.arcs),
        "blue": lambda: _blue(diagram, blues),
        "curves": lambda: _curves(diagram, curves),
    }
    for name in LAYERS:
        if name in chosen:
            body.extend(drawers[name]())  # type: ignore[operator]
    title = escape(f"{diagram.code} case {int(diagram.kind)}")
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">'
    )
    return "\n".join([head, f"<title>{title}</title>", *body, "</svg>", ""])

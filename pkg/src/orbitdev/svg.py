"""SVG drawing of the unit triangle and its nearest affine/isometric images."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass

import numpy as np

from .nearest import nearest_pair
from .triangles import (
    DELTA,
    TriangleSides,
    affine_deviation_from_delta,
    isometric_deviation_from_delta,
    unbalance_factor,
)

CANVAS = 800
FILL_FRACTION = 0.8
SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class RenderOptions:
    stroke_width: float = 2.0
    reference_color: str = "gray"
    affine_color: str = "blue"
    isometric_color: str = "red"
    legend: bool = True


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _value(v: float) -> str:
    return "inf" if np.isinf(v) else f"{v:.6g}"


def render_svg(s: TriangleSides, options: RenderOptions | None = None) -> str:
    """Render ``DELTA``, ``z*`` and ``z★`` for sides ``s`` as a standalone SVG 1.1 document.

    The union bounding box of the three triangles fills 80% of an
    800x800 canvas, and the y axis points up so that counter-clockwise
    triangles read counter-clockwise. Output is a pure function of its
    arguments.
    """
    opts = options or RenderOptions()
    pair = nearest_pair(s)
    shapes = [
        ("reference", DELTA, opts.reference_color, None),
        ("affine", pair.z_star_affine, opts.affine_color, "10 5"),
        ("isometric", pair.z_star_isometric, opts.isometric_color, "3 4"),
    ]
    pts = np.concatenate([t.vertices for _, t, _, _ in shapes])
    lo = np.array([pts.real.min(), pts.imag.min()])
    hi = np.array([pts.real.max(), pts.imag.max()])
    mid = (lo + hi) / 2.0
    scale = FILL_FRACTION * CANVAS / max(float(np.max(hi - lo)), 1e-300)

    def to_canvas(z: complex) -> tuple[float, float]:
        return (CANVAS / 2 + scale * (z.real - mid[0]), CANVAS / 2 - scale * (z.imag - mid[1]))

    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": str(CANVAS),
            "height": str(CANVAS),
            "viewBox": f"0 0 {CANVAS} {CANVAS}",
        },
    )
    ET.SubElement(root, "rect", {"width": "100%", "height": "100%", "fill": "white"})

    for name, tri, color, dash in shapes:
        group = ET.SubElement(root, "g", {"id": name})
        corners = [to_canvas(z) for z in tri]
        attrs = {
            "points": " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in corners),
            "fill": "none",
            "stroke": color,
            "stroke-width": f"{opts.stroke_width:g}",
            "stroke-linejoin": "round",
        }
        if dash:
            attrs["stroke-dasharray"] = dash
        ET.SubElement(group, "polygon", attrs)
        for k, (x, y) in enumerate(corners, start=1):
            ET.SubElement(
                group, "circle", {"cx": _fmt(x), "cy": _fmt(y), "r": f"{2 * opts.stroke_width:g}", "fill": color}
            )
            label = ET.SubElement(
                group, "text", {"x": _fmt(x + 6), "y": _fmt(y - 6), "font-size": "14", "fill": color}
            )
            label.text = str(k)

    if opts.legend:
        lines = [
            ("Δ unit regular triangle", opts.reference_color),
            (f"z* affine deviation {_value(affine_deviation_from_delta(s))}", opts.affine_color),
            (f"z★ isometric deviation {_value(isometric_deviation_from_delta(s))}", opts.isometric_color),
            (f"unbalance factor {_value(unbalance_factor(s))}", "black"),
        ]
        if pair.degenerate_isometric:
            lines.append(("z★ = a·conj(Δ): equilateral clockwise, any rotation is optimal", "black"))
        legend = ET.SubElement(root, "g", {"id": "legend", "font-family": "sans-serif", "font-size": "16"})
        for row, (text, color) in enumerate(lines):
            item = ET.SubElement(legend, "text", {"x": "16", "y": str(28 + 22 * row), "fill": color})
            item.text = text

    body = ET.tostring(root, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"

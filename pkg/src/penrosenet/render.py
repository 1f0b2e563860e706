"""SVG rendering of patches, net points, and square-grid overlays.

Produces self-contained SVG 1.1 documents: one ``<polygon>`` per half-tile
with fills keyed by tile kind, optional ``<circle>`` markers for net points,
and an optional unit-grid overlay for reading off square counts.  The y axis
is flipped so the mathematical orientation (counterclockwise positive)
matches the on-screen picture.
"""

from __future__ import annotations

import math

import numpy as np

from .net import Net
from .tiling import HALF_KITE, Patch

__all__ = ["render_svg"]

KITE_FILL = "#8ecae6"
DART_FILL = "#ffb703"
KITE_POINT_FILL = "#1d5a7a"
DART_POINT_FILL = "#9a5a00"


def _fmt(v: float) -> str:
    out = f"{v:.6g}"
    return "0" if out == "-0" else out


def render_svg(
    patch: Patch,
    net: Net | None = None,
    overlay: str = "none",
    stroke_width: float = 0.03,
    kite_fill: str = KITE_FILL,
    dart_fill: str = DART_FILL,
    grid_step: float = 1.0,
    margin: float = 0.5,
) -> str:
    """Render the patch (and overlay) to an SVG document string.

    ``overlay`` is one of ``"none"``, ``"net"`` (incenter markers; requires
    ``net``), or ``"grid"`` (integer-multiple grid lines over the drawing,
    plus net markers when a net is supplied).
    """
    if overlay not in ("none", "net", "grid"):
        raise ValueError(f"unknown overlay {overlay!r}")
    if overlay == "net" and net is None:
        raise ValueError("net overlay requires a net")

    emb = patch.embedded()
    lo = emb.reshape(-1, 2).min(axis=0) - margin
    hi = emb.reshape(-1, 2).max(axis=0) + margin
    width, height = hi - lo

    # SVG y grows downward; flip so the tiling's y grows upward
    def pt(x: float, y: float) -> str:
        return f"{_fmt(x - lo[0])},{_fmt(hi[1] - y)}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width * 40)}" height="{_fmt(height * 40)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<g stroke="#30343a" stroke-width="{_fmt(stroke_width)}" '
        'stroke-linejoin="round">',
    ]
    fills = {True: kite_fill, False: dart_fill}
    for i in range(len(patch)):
        tri = emb[i]
        points = " ".join(pt(float(v[0]), float(v[1])) for v in tri)
        parts.append(
            f'<polygon points="{points}" fill="{fills[bool(patch.kinds[i] == HALF_KITE)]}"/>'
        )
    parts.append("</g>")

    if overlay == "grid":
        x0 = math.floor(lo[0] / grid_step) * grid_step
        y0 = math.floor(lo[1] / grid_step) * grid_step
        parts.append('<g stroke="#666" stroke-width="0.012" opacity="0.7">')
        x = x0
        while x <= hi[0]:
            a, b = pt(x, lo[1]), pt(x, hi[1])
            ax, ay = a.split(",")
            bx, by = b.split(",")
            parts.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
            x += grid_step
        y = y0
        while y <= hi[1]:
            a, b = pt(lo[0], y), pt(hi[0], y)
            ax, ay = a.split(",")
            bx, by = b.split(",")
            parts.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
            y += grid_step
        parts.append("</g>")

    if net is not None and overlay in ("net", "grid"):
        parts.append('<g stroke="none">')
        point_fills = {True: KITE_POINT_FILL, False: DART_POINT_FILL}
        for j in range(len(net)):
            x, y = float(net.xy[j, 0]), float(net.xy[j, 1])
            cx, cy = pt(x, y).split(",")
            fill = point_fills[bool(net.source_kinds[j] == HALF_KITE)]
            parts.append(f'<circle cx="{cx}" cy="{cy}" r="0.09" fill="{fill}"/>')
        parts.append("</g>")

    parts.append("</svg>")
    return "\n".join(parts) + "\n"

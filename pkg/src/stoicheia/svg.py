"""Deterministic SVG 1.1 rendering of dissections.

One polygon element per piece, coordinates taken from the exact values and
formatted at fixed precision, so identical inputs always produce byte
identical files.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .tiling import Dissection, Mode

__all__ = ["dissection_svg"]

_PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#59a14f",
    "#e15759",
    "#b07aa1",
    "#76b7b2",
    "#edc948",
    "#9c755f",
)


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def dissection_svg(
    d: Dissection,
    pixel_scale: Union[int, Fraction] = 160,
    margin: float = 12.0,
) -> str:
    scale = float(Fraction(pixel_scale))
    xs = []
    ys = []
    for poly in (d.target, *(p.vertices for p in d.pieces)):
        for v in poly:
            xs.append(float(v.x) * scale)
            ys.append(float(v.y) * scale)
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    width = max_x - min_x + 2 * margin
    height = max_y - min_y + 2 * margin

    def project(p) -> str:
        # SVG y grows downward; flip so the figures sit upright.
        px = float(p.x) * scale - min_x + margin
        py = max_y - float(p.y) * scale + margin
        return f"{_fmt(px)},{_fmt(py)}"

    opacity = "0.45" if d.mode is Mode.COVERING else "0.85"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    for i, piece in enumerate(d.pieces):
        points = " ".join(project(v) for v in piece.vertices)
        color = _PALETTE[i % len(_PALETTE)]
        lines.append(
            f'<polygon points="{points}" fill="{color}" fill-opacity="{opacity}" '
            f'stroke="#222222" stroke-width="1"/>'
        )
    outline = " ".join(project(v) for v in d.target)
    lines.append(
        f'<polygon points="{outline}" fill="none" stroke="#000000" stroke-width="2"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

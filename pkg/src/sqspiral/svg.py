"""Deterministic SVG rendering of the spiral, marked groups, and arm overlays.

Output is byte-stable: fixed 6-decimal coordinate formatting, fixed element
order, no timestamps.  The spiral is drawn counterclockwise; `mirror` flips
the y axis for comparison with mirrored drawings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .table import SpiralTable
from . import arms as _arms
from .series import AnalysisSeries

DEFAULT_STYLE = {
    "background": "#ffffff",
    "boundary.color": "#404040",
    "boundary.width": "1.0",
    "ray.color": "#b0b0b0",
    "ray.width": "0.5",
    "marker.radius": "3.0",
    "arm.width": "1.5",
    "axis.color": "#888888",
    "text.size": "10",
}


def parse_style(text: str) -> dict:
    """Parse a key=value style file; unknown keys are rejected."""
    style = dict(DEFAULT_STYLE)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):  # values may contain '#' (colors)
            continue
        if "=" not in line:
            raise ValueError(f"style line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in DEFAULT_STYLE:
            raise ValueError(f"style line {lineno}: unknown key {key!r}")
        style[key] = value
    return style


@dataclass(frozen=True)
class GroupStyle:
    group: _arms.NumberGroup
    color: str = "#d9a516"
    draw_rays: bool = False


@dataclass(frozen=True)
class RenderSpec:
    max_n: int
    groups: tuple = ()
    arm_overlays: tuple = ()          # Arm objects
    arm_colors: tuple = ("#2d7d46", "#b03a2e", "#2e6db0", "#8e44ad")
    labels: bool = False
    size: int = 800
    scale: float = 20.0
    mirror: bool = False
    style: dict = field(default_factory=lambda: dict(DEFAULT_STYLE))

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be > 0")


def _fmt(x: float) -> str:
    out = f"{x:.6f}"
    return "0.000000" if out == "-0.000000" else out


def _point(table: SpiralTable, n: int, spec: RenderSpec) -> tuple:
    ray = table.ray(n)
    y = ray.y if spec.mirror else -ray.y
    return ray.x * spec.scale, y * spec.scale


def render_svg(table: SpiralTable, spec: RenderSpec) -> str:
    """Spiral boundary polyline, group markers, and arm overlay polylines."""
    if spec.max_n > table.max_n:
        raise IndexError(f"render range {spec.max_n} exceeds table bound {table.max_n}")
    style = spec.style
    extent = spec.scale * math.sqrt(spec.max_n) + 4 * spec.scale
    view = f"{_fmt(-extent)} {_fmt(-extent)} {_fmt(2 * extent)} {_fmt(2 * extent)}"
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.size}" '
        f'height="{spec.size}" viewBox="{view}">',
        f'<rect x="{_fmt(-extent)}" y="{_fmt(-extent)}" width="{_fmt(2 * extent)}" '
        f'height="{_fmt(2 * extent)}" fill="{style["background"]}"/>',
    ]
    boundary = " ".join(
        f"{_fmt(x)},{_fmt(y)}"
        for x, y in (_point(table, n, spec) for n in range(1, spec.max_n + 1)))
    parts.append(
        f'<polyline points="{boundary}" fill="none" '
        f'stroke="{style["boundary.color"]}" stroke-width="{style["boundary.width"]}"/>')
    for gs in spec.groups:
        mem = _arms.members(gs.group, spec.max_n)
        if gs.draw_rays:
            for n in mem:
                x, y = _point(table, n, spec)
                parts.append(
                    f'<line x1="0.000000" y1="0.000000" x2="{_fmt(x)}" y2="{_fmt(y)}" '
                    f'stroke="{style["ray.color"]}" stroke-width="{style["ray.width"]}"/>')
        for n in mem:
            x, y = _point(table, n, spec)
            parts.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{style["marker.radius"]}" '
                f'fill="{gs.color}"/>')
            if spec.labels:
                parts.append(
                    f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{style["text.size"]}" '
                    f'fill="#202020">{n}</text>')
    for idx, arm in enumerate(spec.arm_overlays):
        color = spec.arm_colors[idx % len(spec.arm_colors)]
        pts = " ".join(
            f"{_fmt(x)},{_fmt(y)}"
            for x, y in (_point(table, n, spec)
                         for n in arm.members if n <= spec.max_n))
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="{style["arm.width"]}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_report_figure(series: AnalysisSeries, width: int = 640,
                         height: int = 400) -> str:
    """Line chart of a series; the claimed limit is drawn as a dashed rule.

    The plotted range spans the data (and the limit rule when present),
    padded by 5% on each side.
    """
    if not series.terms:
        raise ValueError(f"{series.label}: nothing to plot")
    xs = [float(i) for i, _ in series.terms]
    ys = [v for _, v in series.terms]
    y_all = ys + ([series.claimed_limit] if series.claimed_limit is not None else [])
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(y_all), max(y_all)
    x_pad = 0.05 * (x_hi - x_lo) or 0.5
    y_pad = 0.05 * (y_hi - y_lo) or 0.5
    x_lo, x_hi = x_lo - x_pad, x_hi + x_pad
    y_lo, y_hi = y_lo - y_pad, y_hi + y_pad
    margin = 40.0

    def sx(x: float) -> float:
        return margin + (x - x_lo) / (x_hi - x_lo) * (width - 2 * margin)

    def sy(y: float) -> float:
        return height - margin - (y - y_lo) / (y_hi - y_lo) * (height - 2 * margin)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<rect x="{_fmt(margin)}" y="{_fmt(margin)}" width="{_fmt(width - 2 * margin)}" '
        f'height="{_fmt(height - 2 * margin)}" fill="none" stroke="#888888"/>',
        f'<text x="{_fmt(margin)}" y="{_fmt(margin - 8)}" font-size="12" '
        f'fill="#202020">{series.label}</text>',
    ]
    if series.claimed_limit is not None:
        ly = sy(series.claimed_limit)
        parts.append(
            f'<line x1="{_fmt(margin)}" y1="{_fmt(ly)}" x2="{_fmt(width - margin)}" '
            f'y2="{_fmt(ly)}" stroke="#b03a2e" stroke-dasharray="4 3"/>')
    if len(series.terms) == 1:
        parts.append(
            f'<circle cx="{_fmt(sx(xs[0]))}" cy="{_fmt(sy(ys[0]))}" r="3.0" '
            f'fill="#2e6db0"/>')
    else:
        pts = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in zip(xs, ys))
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="#2e6db0" '
            f'stroke-width="1.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

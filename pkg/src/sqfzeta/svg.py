"""Minimal SVG line charts (no plotting library)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

__all__ = ["Series", "line_chart"]

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


@dataclass
class Series:
    x: np.ndarray
    y: np.ndarray
    label: str = ""
    color: str | None = None


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=10 * mag)
    start = math.ceil(lo / step) * step
    return [t for t in np.arange(start, hi + step / 2, step) if lo - 1e-12 <= t <= hi + 1e-12]


def _fmt(v: float) -> str:
    return f"{v:.4g}"


def line_chart(
    series: list[Series],
    *,
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
    logx: bool = False,
    logy: bool = False,
    hlines: tuple[tuple[float, str], ...] = (),
    width: int = 720,
    height: int = 420,
) -> str:
    """Render ``series`` as an SVG document string.

    ``logx``/``logy`` plot log10 of the data; non-positive values are dropped
    on log axes.  ``hlines`` draws dashed horizontal reference lines.
    """
    left, right, top, bottom = 70, 20, 40, 50
    pw, ph = width - left - right, height - top - bottom

    def tx(v):
        return np.log10(v) if logx else v

    def ty(v):
        return np.log10(v) if logy else v

    cleaned = []
    for s in series:
        x, y = np.asarray(s.x, float), np.asarray(s.y, float)
        keep = np.isfinite(x) & np.isfinite(y)
        if logx:
            keep &= x > 0
        if logy:
            keep &= y > 0
        cleaned.append((tx(x[keep]), ty(y[keep]), s))
    xs = np.concatenate([c[0] for c in cleaned]) if cleaned else np.zeros(1)
    ys = np.concatenate([c[1] for c in cleaned] + [np.array([ty(v) for v, _ in hlines])])
    if xs.size == 0 or ys.size == 0:
        raise ValueError("nothing to plot")
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    pad = 0.05 * (y1 - y0 or 1.0)
    y0, y1 = y0 - pad, y1 + pad

    def px(v):
        return left + (v - x0) / (x1 - x0) * pw

    def py(v):
        return top + (y1 - v) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="#444"/>',
    ]
    for t in _ticks(x0, x1):
        label = _fmt(10**t) if logx else _fmt(t)
        out.append(f'<line x1="{px(t):.1f}" y1="{top + ph}" x2="{px(t):.1f}" y2="{top + ph + 4}" stroke="#444"/>')
        out.append(f'<text x="{px(t):.1f}" y="{top + ph + 16}" text-anchor="middle">{label}</text>')
    for t in _ticks(y0, y1):
        label = _fmt(10**t) if logy else _fmt(t)
        out.append(f'<line x1="{left - 4}" y1="{py(t):.1f}" x2="{left}" y2="{py(t):.1f}" stroke="#444"/>')
        out.append(f'<text x="{left - 6}" y="{py(t) + 4:.1f}" text-anchor="end">{label}</text>')
    for value, label in hlines:
        yv = py(ty(value))
        out.append(
            f'<line x1="{left}" y1="{yv:.1f}" x2="{left + pw}" y2="{yv:.1f}" '
            f'stroke="#888" stroke-dasharray="6,4"/>'
        )
        if label:
            out.append(f'<text x="{left + pw - 4}" y="{yv - 4:.1f}" text-anchor="end" fill="#555">{escape(label)}</text>')
    for i, (x, y, s) in enumerate(cleaned):
        color = s.color or PALETTE[i % len(PALETTE)]
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x, y))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.2" points="{pts}"/>')
        if s.label:
            ly = top + 14 + 14 * i
            out.append(f'<text x="{left + 8}" y="{ly}" fill="{color}">{escape(s.label)}</text>')
    if title:
        out.append(f'<text x="{width / 2}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>')
    if xlabel:
        out.append(f'<text x="{left + pw / 2}" y="{height - 10}" text-anchor="middle">{escape(xlabel)}</text>')
    if ylabel:
        out.append(
            f'<text x="16" y="{top + ph / 2}" text-anchor="middle" '
            f'transform="rotate(-90 16 {top + ph / 2})">{escape(ylabel)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

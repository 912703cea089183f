"""SVG sketches of truss deformation modes (display only)."""

from __future__ import annotations

import math
import re
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

from .truss.model import TrussModel

CANVAS = 480
MARGIN = 60


def _num(x) -> str:
    return f"{float(x):.6g}"


def default_scale(model: TrussModel, generator: Sequence) -> float:
    """Deflect by a tenth of the bounding-box diagonal per unit generator norm."""
    xs = [float(n.x) for n in model.nodes]
    ys = [float(n.y) for n in model.nodes]
    diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    norm = math.sqrt(sum(float(g) ** 2 for g in generator)) or 1.0
    return diag / 10 / norm


def render_svg(model: TrussModel, generator: Sequence, label: str, scale=None) -> str:
    factor = default_scale(model, generator) if scale is None else float(Fraction(scale))
    base = {n.id: (float(n.x), float(n.y)) for n in model.nodes}
    moved = {
        n.id: (base[n.id][0] + factor * float(generator[2 * k]), base[n.id][1] + factor * float(generator[2 * k + 1]))
        for k, n in enumerate(model.nodes)
    }
    pts = list(base.values()) + list(moved.values())
    x0, x1 = min(p[0] for p in pts), max(p[0] for p in pts)
    y0, y1 = min(p[1] for p in pts), max(p[1] for p in pts)
    span = max(x1 - x0, y1 - y0) or 1.0
    k = (CANVAS - 2 * MARGIN) / span

    def xy(p):
        return _num(MARGIN + (p[0] - x0) * k), _num(CANVAS - MARGIN - (p[1] - y0) * k)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">',
        "<!-- display-only, analysis is exact -->",
        f"<title>{label}</title>",
        '<g class="undeformed" stroke="#999999" stroke-width="2" stroke-dasharray="6,4">',
    ]
    for b in model.bars:
        (xa, ya), (xb, yb) = xy(base[b.i]), xy(base[b.j])
        out.append(f'<line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}"/>')
    out.append("</g>")
    out.append('<g class="deformed" stroke="#c0392b" stroke-width="3">')
    for b in model.bars:
        (xa, ya), (xb, yb) = xy(moved[b.i]), xy(moved[b.j])
        out.append(f'<line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}"/>')
    out.append("</g>")
    out.append('<g class="nodes" fill="#c0392b">')
    for nid, p in moved.items():
        cx, cy = xy(p)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="4"><title>node {nid}</title></circle>')
    out.append("</g>")
    out.append(f'<text x="{MARGIN}" y="{MARGIN // 2}" font-family="sans-serif" font-size="16">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(model: TrussModel, labeled: Sequence[tuple[str, Sequence]], directory, scale=None) -> list[Path]:
    """Write one SVG per ``(label, generator)``; returns the written paths."""
    labeled = list(labeled)
    if not labeled:
        return []
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, (lab, g) in enumerate(labeled, 1):
        if len(g) != model.ndof:
            raise ValueError(f"generator {i} has length {len(g)}, expected {model.ndof}")
        safe = re.sub(r"[^A-Za-z0-9_-]+", "_", lab)
        p = d / f"mode_{i:02d}_{safe}.svg"
        p.write_text(render_svg(model, g, lab, scale), encoding="utf-8")
        paths.append(p)
    return paths

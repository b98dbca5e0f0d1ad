"""SVG drawings of lattice paths on a unit grid.

Lattice points are dots, the path is a polyline, and a marked mountain or
valley is filled down (or up) to the horizontal through its lower end.
Several paths are laid out left to right with a gap, which is how a pair
``(F, D)`` is drawn.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from .paths import LatticePath, as_path, levels
from .stats import MarkedPath, Statistic

__all__ = ["render", "render_path", "render_pair"]

UNIT = 20
MARGIN = 20
GAP = 2  # grid units between consecutive panels


def _panel(word: str, x0: int, top: int, mark_pts: list[tuple[int, int]] | None, label: str | None):
    lv = levels(word)
    pts = [(x0 + i, h) for i, h in enumerate(lv)]

    def xy(p):
        return MARGIN + p[0] * UNIT, MARGIN + (top - p[1]) * UNIT

    out = []
    lo, hi = min(lv), max(lv)
    # grid
    for h in range(lo, hi + 1):
        (ax, ay), (bx, _) = xy((x0, h)), xy((x0 + len(word), h))
        colour = "#999" if h == 0 else "#ddd"
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{ay}" stroke="{colour}" stroke-width="1"/>')
    for i in range(len(word) + 1):
        (ax, ay), (_, by) = xy((x0 + i, hi)), xy((x0 + i, lo))
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{ax}" y2="{by}" stroke="#eee" stroke-width="1"/>')
    if mark_pts:
        poly = " ".join(f"{a},{b}" for a, b in map(xy, mark_pts))
        out.append(f'<polygon points="{poly}" fill="#9bb7d4" stroke="none"/>')
    if len(pts) > 1:
        line = " ".join(f"{a},{b}" for a, b in map(xy, pts))
        out.append(f'<polyline points="{line}" fill="none" stroke="black" stroke-width="2"/>')
    for p in pts:
        a, b = xy(p)
        out.append(f'<circle cx="{a}" cy="{b}" r="3" fill="black"/>')
    if label is not None:
        a, _ = xy((x0, lo))
        _, b = xy((x0, lo - 1))
        out.append(f'<text x="{a}" y="{b}" font-family="monospace" font-size="12">{escape(label)}</text>')
    return out


def _mark_region(m: MarkedPath) -> list[tuple[int, int]]:
    """Polygon of the marked mountain or valley, in (point, level) coordinates."""
    rec = m.record
    lv = m.path.levels()
    if m.statistic is Statistic.PEAK:
        a, b = rec.start, rec.apex + rec.downs
    else:
        a, b = rec.start, rec.nadir + rec.ups
    base = min(lv[a], lv[b]) if m.statistic is Statistic.PEAK else max(lv[a], lv[b])
    pts = [(i, lv[i]) for i in range(a, b + 1)]
    return [(a, base)] + pts + [(b, base)]


def render(items, labels: list[str] | None = None) -> str:
    """SVG document with one panel per item (paths or marked paths)."""
    words, marks = [], []
    for it in items:
        if isinstance(it, MarkedPath):
            words.append(it.path.steps)
            marks.append(_mark_region(it))
        else:
            words.append(as_path(it).steps)
            marks.append(None)
    all_lv = [h for w in words for h in levels(w)]
    top, bottom = max(all_lv), min(all_lv)
    has_labels = labels is not None
    width_units = sum(len(w) for w in words) + GAP * (len(words) - 1)
    height_units = top - bottom + (1 if has_labels else 0)
    width = 2 * MARGIN + width_units * UNIT
    height = 2 * MARGIN + height_units * UNIT

    body, x0 = [], 0
    for i, (w, mk) in enumerate(zip(words, marks)):
        shifted = None if mk is None else [(x0 + p, h) for p, h in mk]
        label = labels[i] if has_labels else None
        body.extend(_panel(w, x0, top, shifted, label))
        x0 += len(w) + GAP
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def render_path(path: LatticePath | str | MarkedPath) -> str:
    return render([path])


def render_pair(first, second) -> str:
    """Side by side drawing of a pair such as ``(F, D)``."""
    f, s = as_path(first).steps, as_path(second).steps
    return render([f, s], labels=[f or "ε", s or "ε"])

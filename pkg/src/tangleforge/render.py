"""Schematic SVG drawing of a diagram.

Handle curves are the sides of a 4g-gon (a plain disk when g = 0), and each
puncture sits inside a small petal loop.  Every component gets one ``<g>``
element holding its chords and dash ticks; each band event is drawn as a
``band`` connector in the side panel.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .diagram import Diagram

WIDTH, HEIGHT = 900, 640
CENTER = (320.0, 320.0)
RADIUS = 260.0
PETAL = 26.0
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _side_points(g: int):
    n = 4 * g
    pts = []
    for k in range(n + 1):
        ang = math.pi / 2 + 2 * math.pi * k / n
        pts.append((CENTER[0] + RADIUS * math.cos(ang), CENTER[1] - RADIUS * math.sin(ang)))
    return pts


def _puncture_centers(count: int):
    if count == 0:
        return []
    span = RADIUS * 1.1
    step = span / max(count - 1, 1)
    x0 = CENTER[0] - span / 2 if count > 1 else CENTER[0]
    return [(x0 + i * step, CENTER[1] + 20.0) for i in range(count)]


def _endpoints(d: Diagram):
    """Screen position of every (dash, end) pair."""
    pos = {}
    g, bb = d.sig.genus, d.sig.bridges
    by_owner: dict[str, list[int]] = {}
    for k, dash in enumerate(d.dashes):
        by_owner.setdefault(dash.owner, []).append(k)
    for owner in by_owner:
        by_owner[owner].sort(key=lambda k: d.dashes[k].pos)
    if g:
        corners = _side_points(g)
        for j in range(1, g + 1):
            base = 4 * (j - 1)
            for offset, owner, end in ((0, f"a{j}", "L"), (1, f"b{j}", "L"),
                                       (2, f"a{j}", "R"), (3, f"b{j}", "R")):
                (x0, y0), (x1, y1) = corners[base + offset], corners[base + offset + 1]
                ids = by_owner.get(owner, [])
                n = len(ids)
                for idx, k in enumerate(ids):
                    f = (idx + 1) / (n + 1) if end == "L" else (n - idx) / (n + 1)
                    x, y = x0 + f * (x1 - x0), y0 + f * (y1 - y0)
                    # nudge inward so chords start inside the polygon
                    x += (CENTER[0] - x) * 0.03
                    y += (CENTER[1] - y) * 0.03
                    pos[(k, end)] = (x, y)
    centers = _puncture_centers(2 * bb)
    for i in range(1, 2 * bb + 1):
        cx, cy = centers[i - 1]
        ids = by_owner.get(f"p{i}", [])
        n = len(ids)
        for idx, k in enumerate(ids):
            ang = math.pi * (idx + 1) / (n + 1)
            ux, uy = -math.cos(ang), -math.sin(ang)
            pos[(k, "out")] = (cx + (PETAL + 7) * ux, cy + (PETAL + 7) * uy)
            pos[(k, "in")] = (cx + (PETAL - 7) * ux, cy + (PETAL - 7) * uy)
    return pos, centers


def render_svg(d: Diagram, title: str = "") -> str:
    pos, centers = _endpoints(d)
    letters = sorted({c.letter for c in d.components})
    color = {l: PALETTE[i % len(PALETTE)] for i, l in enumerate(letters)}
    comp_color = {c.id: color[c.letter] for c in d.components}

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
           f'viewBox="0 0 {WIDTH} {HEIGHT}">',
           f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>']
    if title:
        out.append(f'<text x="20" y="24" font-size="16">{escape(title)}</text>')

    g = d.sig.genus
    if g:
        corners = _side_points(g)
        out.append('<g class="surface">')
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in corners)
        out.append(f'<polyline points="{pts}" fill="none" stroke="#444" stroke-width="1.5"/>')
        for j in range(1, g + 1):
            for offset, label in enumerate((f"a{j}", f"b{j}", f"a{j}^-1", f"b{j}^-1")):
                (x0, y0), (x1, y1) = corners[4 * (j - 1) + offset], corners[4 * (j - 1) + offset + 1]
                mx, my = (x0 + x1) / 2, (y0 + y1) / 2
                lx, ly = mx + (mx - CENTER[0]) * 0.08, my + (my - CENTER[1]) * 0.08
                out.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" '
                           f'text-anchor="middle">{label}</text>')
        out.append('</g>')
    else:
        out.append(f'<g class="surface"><circle cx="{_fmt(CENTER[0])}" cy="{_fmt(CENTER[1])}" '
                   f'r="{_fmt(RADIUS)}" fill="none" stroke="#444" stroke-width="1.5"/></g>')
    if centers:
        out.append('<g class="punctures">')
        for i, (cx, cy) in enumerate(centers, start=1):
            out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(PETAL)}" fill="none" '
                       f'stroke="#999" stroke-dasharray="3,3"/>')
            out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3" fill="black"/>')
            out.append(f'<text x="{_fmt(cx)}" y="{_fmt(cy + PETAL + 16)}" font-size="12" '
                       f'text-anchor="middle">p{i}</text>')
        out.append('</g>')

    for c in d.components:
        col = comp_color[c.id]
        out.append(f'<g class="component {c.kind}" id="component-{c.id}" '
                   f'data-letter="{c.letter}" stroke="{col}" fill="none" stroke-width="2">')
        for d1, e1, d2, e2 in d.chords:
            if d.dashes[d1].component != c.id:
                continue
            (x1, y1), (x2, y2) = pos[(d1, e1)], pos[(d2, e2)]
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            qx, qy = mx + (CENTER[0] - mx) * 0.35, my + (CENTER[1] - my) * 0.35
            out.append(f'<path d="M {_fmt(x1)} {_fmt(y1)} Q {_fmt(qx)} {_fmt(qy)} '
                       f'{_fmt(x2)} {_fmt(y2)}"/>')
        for dash_id, puncture in d.links:
            if d.dashes[dash_id].component != c.id:
                continue
            x1, y1 = pos[(dash_id, "in")]
            x2, y2 = centers[puncture - 1]
            out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
        for k, dash in enumerate(d.dashes):
            if dash.component != c.id:
                continue
            ends = [pos[key] for key in ((k, "L"), (k, "R"), (k, "out")) if key in pos]
            for x, y in ends:
                out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.5" fill="{col}"/>')
        out.append('</g>')

    px, py = WIDTH - 250, 50
    out.append('<g class="legend" font-size="12">')
    for c in sorted(d.components, key=lambda c: (c.letter, c.id)):
        label = f"{c.letter} {c.kind}"
        if c.endpoints:
            label += f" p{c.endpoints[0]}-p{c.endpoints[1]}"
        out.append(f'<line x1="{px}" y1="{py - 4}" x2="{px + 24}" y2="{py - 4}" '
                   f'stroke="{comp_color[c.id]}" stroke-width="3"/>')
        out.append(f'<text x="{px + 32}" y="{py}">{escape(label)}</text>')
        py += 18
    out.append('</g>')
    py += 12
    for n, band in enumerate(d.bands, start=1):
        out.append(f'<g class="band" data-from="{band.source}" data-to="{band.target}" '
                   f'data-result="{band.result}" data-case="{band.case}">')
        out.append(f'<line x1="{px}" y1="{py - 4}" x2="{px + 24}" y2="{py - 4}" '
                   f'stroke="black" stroke-width="6" stroke-linecap="square"/>')
        out.append(f'<text x="{px + 32}" y="{py}" font-size="12">band {n}: '
                   f'{band.source} + {band.target} -&gt; {band.result} ({band.case})</text>')
        out.append('</g>')
        py += 18
    out.append('</svg>')
    return "\n".join(out) + "\n"

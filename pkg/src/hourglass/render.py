"""SVG and DOT emitters.

Boundary vertices sit equally spaced on a circle in clockwise label
order; interior positions come from a seeded spring layout.  An
m-hourglass is drawn as m strands offset to the same side at both ends,
so they cross in the middle like the twist they represent.
"""

from __future__ import annotations

import math
import random

from .hpgraph import BLACK, BOUNDARY, HourglassGraph


def layout(G: HourglassGraph, seed: int = 7, iterations: int = 300) -> dict[int, tuple[float, float]]:
    rng = random.Random(seed)
    pos: dict[int, tuple[float, float]] = {}
    n = max(G.n, 1)
    for j, vid in enumerate(G.boundary):
        t = 2 * math.pi * j / n
        pos[vid] = (math.sin(t), math.cos(t))
    interior = [v.id for v in G.internal_vertices()]
    for vid in interior:
        pos[vid] = (0.4 * (rng.random() - 0.5), 0.4 * (rng.random() - 0.5))
    for _ in range(iterations):
        force = {vid: [0.0, 0.0] for vid in interior}
        for e in G.edges.values():
            for a, b in ((e.u, e.v), (e.v, e.u)):
                if a in force:
                    dx = pos[b][0] - pos[a][0]
                    dy = pos[b][1] - pos[a][1]
                    force[a][0] += 0.05 * dx * e.m
                    force[a][1] += 0.05 * dy * e.m
        for a in interior:
            for b in pos:
                if a == b:
                    continue
                dx = pos[a][0] - pos[b][0]
                dy = pos[a][1] - pos[b][1]
                d2 = dx * dx + dy * dy + 1e-6
                force[a][0] += 0.01 * dx / d2
                force[a][1] += 0.01 * dy / d2
        for a in interior:
            pos[a] = (pos[a][0] + force[a][0], pos[a][1] + force[a][1])
    return pos


def to_svg(G: HourglassGraph, size: int = 480) -> str:
    pos = layout(G)
    c = size / 2
    scale = size * 0.42

    def xy(vid):
        x, y = pos[vid]
        return c + scale * x, c - scale * y

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">',
             f'<circle cx="{c}" cy="{c}" r="{scale * 1.08:.1f}" fill="none" '
             f'stroke="#bbb" stroke-dasharray="4 4"/>']
    for e in G.edges.values():
        (x1, y1), (x2, y2) = xy(e.u), xy(e.v)
        dx, dy = x2 - x1, y2 - y1
        norm = math.hypot(dx, dy) or 1.0
        px, py = -dy / norm, dx / norm
        for k in range(e.m):
            off = 3.5 * (k - (e.m - 1) / 2)
            # same-side offsets at both ends: the strands cross mid-edge
            mx = (x1 + x2) / 2 - px * off
            my = (y1 + y2) / 2 - py * off
            parts.append(
                f'<path d="M {x1 + px * off:.1f} {y1 + py * off:.1f} '
                f'Q {mx:.1f} {my:.1f} {x2 + px * off:.1f} {y2 + py * off:.1f}" '
                f'fill="none" stroke="#333"/>')
    for vid, v in G.vertices.items():
        x, y = xy(vid)
        fill = "#000" if v.color == BLACK else "#fff"
        radius = 5 if v.kind == BOUNDARY else 7
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="{radius}" fill="{fill}" '
                     f'stroke="#000"/>')
        if v.kind == BOUNDARY:
            lx = c + (x - c) * 1.12
            ly = c + (y - c) * 1.12
            parts.append(f'<text x="{lx:.1f}" y="{ly:.1f}" font-size="11" '
                         f'text-anchor="middle">{G.boundary_label(vid)}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def to_dot(G: HourglassGraph) -> str:
    lines = ["graph hourglass {", "  node [shape=circle];"]
    for vid, v in sorted(G.vertices.items()):
        style = "filled" if v.color == BLACK else "solid"
        label = str(G.boundary_label(vid)) if v.kind == BOUNDARY else ""
        lines.append(f'  v{vid} [style={style}, label="{label}"];')
    for e in sorted(G.edges.values(), key=lambda e: e.id):
        attr = f' [label="{e.m}"]' if e.m > 1 else ""
        lines.append(f"  v{e.u} -- v{e.v}{attr};")
    lines.append("}")
    return "\n".join(lines)

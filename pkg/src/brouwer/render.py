"""
Drawings of a diagram with walls: endpoints on the unit circle, arrows from the
minus end to the plus end, walls as dashed chords, irreducible areas in grey.

Every output is a pure function of the input, so repeated runs are
byte-identical.
"""

from __future__ import annotations

import math

from .diagram import format_diagram
from .walls import IRREDUCIBLE, DiagramWithWalls, _place

FORMATS = ("ascii", "dot", "svg")


def _at(t: float, n: int) -> tuple[float, float]:
    a = 2 * math.pi * t / n
    return (math.cos(a), math.sin(a))


def _side(p, u, v) -> int:
    s = (v[0] - u[0]) * (p[1] - u[1]) - (v[1] - u[1]) * (p[0] - u[0])
    return 1 if s > 1e-12 else -1


class _Layout:
    def __init__(self, dw: DiagramWithWalls):
        d = dw.diagram
        self.dw = dw
        self.n = d.n
        self.points = [_at(k, self.n) for k in range(self.n)]
        self.walls = [(_at(u, self.n), _at(v, self.n)) for u, v in _place(list(dw.walls), self.n)]
        self.arrows = [
            (self.points[d.arrow(o)[0]], self.points[d.arrow(o)[1]], o) for o in d.orbits()
        ]

    def signature(self, p) -> tuple[int, ...]:
        return tuple(_side(p, u, v) for u, v in self.walls)

    def area_signature(self, orbit: int) -> tuple[int, ...]:
        x, y = self.points[self.dw.diagram.arrow(orbit)[0]]
        return self.signature((0.97 * x, 0.97 * y))

    def shaded(self) -> list[tuple[int, ...]]:
        return [self.area_signature(a.orbits[0]) for a in self.dw.areas if a.kind == IRREDUCIBLE]

    def region_polygon(self, sig: tuple[int, ...], samples: int = 720) -> list[tuple[float, float]]:
        # areas cut out of the disk by disjoint chords are convex
        pts = [p for p in (_at(k * self.n / samples, self.n) for k in range(samples)) if self.signature_close(p, sig)]
        for u, v in self.walls:
            pts.extend(q for q in (u, v) if self.signature_close(q, sig))
        if not pts:
            return []
        cx = sum(p[0] for p in pts) / len(pts)
        cy = sum(p[1] for p in pts) / len(pts)
        return sorted(set(pts), key=lambda p: math.atan2(p[1] - cy, p[0] - cx))

    def signature_close(self, p, sig) -> bool:
        for (u, v), s in zip(self.walls, sig):
            val = (v[0] - u[0]) * (p[1] - u[1]) - (v[1] - u[1]) * (p[0] - u[0])
            if val * s < -1e-9:
                return False
        return True


def _ascii(dw: DiagramWithWalls, width: int = 61, height: int = 31) -> str:
    lay = _Layout(dw)
    grid = [[" "] * width for _ in range(height)]

    def cell(p):
        return (round((p[0] + 1) / 2 * (width - 1)), round((1 - (p[1] + 1) / 2) * (height - 1)))

    shade = set(lay.shaded())
    for row in range(height):
        for col in range(width):
            x = col / (width - 1) * 2 - 1
            y = 1 - row / (height - 1) * 2
            if x * x + y * y < 0.9 and lay.signature((x, y)) in shade:
                grid[row][col] = ":"
    for k in range(720):
        c, r = cell(_at(k * lay.n / 720, lay.n))
        grid[r][c] = "o"

    def line(u, v, ch, dashed=False):
        steps = 4 * max(width, height)
        for s in range(1, steps):
            if dashed and (s * 12 // steps) % 2:
                continue
            t = s / steps
            c, r = cell((u[0] + t * (v[0] - u[0]), u[1] + t * (v[1] - u[1])))
            if grid[r][c] in " :":
                grid[r][c] = ch

    for u, v in lay.walls:
        line(u, v, "=", dashed=True)
    for u, v, o in lay.arrows:
        line(u, v, "*")
        c, r = cell((0.85 * v[0] + 0.15 * u[0], 0.85 * v[1] + 0.15 * u[1]))
        grid[r][c] = ">"
    d = dw.diagram
    for k, e in enumerate(d.cyc):
        x, y = lay.points[k]
        c, r = cell((x, y))
        label = str(e)
        for i, ch in enumerate(label):
            if 0 <= c + i < width:
                grid[r][c + i] = ch
    lines = ["".join(row).rstrip() for row in grid]
    lines.append(format_diagram(d))
    lines.append(dw.wall_text())
    lines.append("legend: * arrow (> near plus end), = dashed wall, : irreducible area")
    return "\n".join(lines) + "\n"


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def _svg(dw: DiagramWithWalls, size: int = 400) -> str:
    lay = _Layout(dw)
    R = size * 0.4
    c = size / 2

    def xy(p):
        return _fmt(c + R * p[0]), _fmt(c - R * p[1])

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">'
        '<path d="M0,0 L8,4 L0,8 z" fill="black"/></marker></defs>',
    ]
    for sig in lay.shaded():
        poly = lay.region_polygon(sig)
        pts = " ".join(",".join(xy(p)) for p in poly)
        out.append(f'<polygon class="irreducible" points="{pts}" fill="#c8c8c8" stroke="none"/>')
    out.append(f'<circle cx="{_fmt(c)}" cy="{_fmt(c)}" r="{_fmt(R)}" fill="none" stroke="black"/>')
    for u, v in lay.walls:
        (x1, y1), (x2, y2) = xy(u), xy(v)
        out.append(f'<line class="wall" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-dasharray="6,4"/>')
    for u, v, o in lay.arrows:
        (x1, y1), (x2, y2) = xy(u), xy(v)
        out.append(
            f'<line class="arrow" data-orbit="{o}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            'stroke="black" marker-end="url(#head)"/>'
        )
    for k, e in enumerate(dw.diagram.cyc):
        x, y = xy((1.1 * lay.points[k][0], 1.1 * lay.points[k][1]))
        label = str(e)
        out.append(f'<text x="{x}" y="{y}" font-size="12" text-anchor="middle">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _dot(dw: DiagramWithWalls) -> str:
    lay = _Layout(dw)
    d = dw.diagram
    out = ["digraph diagram {", "  layout=neato;", "  node [shape=point];"]
    for k, e in enumerate(d.cyc):
        x, y = lay.points[k]
        label = str(e)
        out.append(f'  p{k} [pos="{_fmt(2 * x)},{_fmt(2 * y)}!", xlabel="{label}"];')
    for i, (u, v) in enumerate(lay.walls):
        out.append(f'  w{i}a [pos="{_fmt(2 * u[0])},{_fmt(2 * u[1])}!", shape=none, label=""];')
        out.append(f'  w{i}b [pos="{_fmt(2 * v[0])},{_fmt(2 * v[1])}!", shape=none, label=""];')
        out.append(f"  w{i}a -> w{i}b [style=dashed, dir=none];")
    for o in d.orbits():
        a, b = d.arrow(o)
        out.append(f'  p{a} -> p{b} [label="{o}"];')
    for j, area in enumerate(a for a in dw.areas if a.kind == IRREDUCIBLE):
        ends = sorted(k for o in area.orbits for k in d.arrow(o))
        out.append(f"  subgraph cluster_irr{j} {{ style=filled; fillcolor=grey; {' '.join(f'p{k};' for k in ends)} }}")
    out.append("}")
    return "\n".join(out) + "\n"


def render(dw: DiagramWithWalls, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return _ascii(dw)
    if fmt == "svg":
        return _svg(dw)
    if fmt == "dot":
        return _dot(dw)
    raise ValueError(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")

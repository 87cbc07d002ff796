"""
Reducing chords, walls and stable areas of a diagram.

The disk of a diagram is planarised with straight arrows between equally spaced
boundary points; every crossing becomes a 4-valent vertex.  Boundary arc g_k runs
from endpoint k to endpoint k+1.  A reducing chord joins two gaps of one face, so it
meets no arrow and leaves whole arrows on both sides.

Conventions (see README for the discussion):

* A face with exactly two gaps whose sides carry the flow in opposite directions is
  a Reeb strip.  It carries two chord classes, one hugging each side, with an empty
  strip between them.  Chord ``(a, b)`` with ``a > b`` only occurs there; chord
  ``(a, b)`` hugs the endpoints a+1..b.
* Walls are the chords disjoint from every other chord of the chosen chord set.
* For a non-crossing diagram the flow realisation treats every chord as reducing.
  When some orbit set passes the irreducible-area constraints, the non-flow
  realisation drops the chords splitting that set; ``compute_walls`` reports the
  non-flow wall set when it exists, ``flow_walls`` always reports the flow one.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .diagram import (
    MINUS,
    PLUS,
    Diagram,
    Endpoint,
    alternates,
    block_index,
    crossings,
    restrict,
)

TRANSLATION = "Translation"
IRREDUCIBLE = "Irreducible"
EMPTY = "Empty"
# an area the chord model cannot settle: neither translation nor irreducible
UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class Face:
    index: int
    gaps: tuple[int, ...]
    # sides[i] lists the arrow segments (orbit, +1 along the arrow / -1 against it)
    # met while walking from gaps[i] to gaps[i+1] with the face on the left
    sides: tuple[tuple[tuple[int, int], ...], ...]
    crossing_vertices: int = 0


@dataclass(frozen=True)
class FaceComplex:
    diagram: Diagram
    n_vertices: int
    n_edges: int
    faces: tuple[Face, ...]  # interior faces only
    gap_face: tuple[int, ...]  # interior face bordering each gap

    def euler(self) -> int:
        return self.n_vertices - self.n_edges + len(self.faces) + 1


@dataclass(frozen=True, order=True)
class Wall:
    a: int
    b: int
    route: tuple[int, ...]

    @property
    def gaps(self) -> frozenset[int]:
        return frozenset((self.a, self.b))

    def __str__(self) -> str:
        return f"(g{self.a},g{self.b};" + ".".join(f"f{f}" for f in self.route) + ")"


@dataclass(frozen=True)
class StableArea:
    orbits: tuple[int, ...]
    boundary: tuple[int, ...]  # indices into DiagramWithWalls.walls
    kind: str

    def report(self) -> dict:
        return {"orbits": list(self.orbits), "kind": self.kind, "boundary": list(self.boundary)}


@dataclass(frozen=True)
class DiagramWithWalls:
    diagram: Diagram
    walls: tuple[Wall, ...]
    areas: tuple[StableArea, ...]
    chords: tuple[Wall, ...] = field(compare=False)  # reducing chords of the realisation
    realisation: str = field(default="flow", compare=False)

    def wall_text(self) -> str:
        return "walls=" + ",".join(str(w) for w in self.walls)

    def irreducible(self) -> list[StableArea]:
        return [a for a in self.areas if a.kind == IRREDUCIBLE]


# -- planarisation ---------------------------------------------------------------


def _point(k: int, n: int) -> tuple[float, float]:
    t = 2 * math.pi * k / n
    return (math.cos(t), math.sin(t))


def _segment_param(p, q, s, t) -> float | None:
    """Parameter along pq of its proper intersection with st."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    ex, ey = t[0] - s[0], t[1] - s[1]
    den = dx * ey - dy * ex
    if abs(den) < 1e-12:
        return None
    u = ((s[0] - p[0]) * ey - (s[1] - p[1]) * ex) / den
    v = ((s[0] - p[0]) * dy - (s[1] - p[1]) * dx) / den
    if 1e-9 < u < 1 - 1e-9 and 1e-9 < v < 1 - 1e-9:
        return u
    return None


def planarize(d: Diagram) -> FaceComplex:
    n = d.n
    coords = [_point(k, n) for k in range(n)]
    arrows = {i: d.arrow(i) for i in d.orbits()}
    # crossing vertices
    cross_id: dict[frozenset[int], int] = {}
    along: dict[int, list[tuple[float, int]]] = {i: [] for i in d.orbits()}
    for i, j in itertools.combinations(d.orbits(), 2):
        p, q = coords[arrows[i][0]], coords[arrows[i][1]]
        s, t = coords[arrows[j][0]], coords[arrows[j][1]]
        u = _segment_param(p, q, s, t)
        if u is None:
            continue
        v = n + len(cross_id)
        cross_id[frozenset((i, j))] = v
        coords.append((p[0] + u * (q[0] - p[0]), p[1] + u * (q[1] - p[1])))
        along[i].append((u, v))
        w = _segment_param(s, t, p, q)
        along[j].append((w, v))

    # edges: (u, v, label); label ('g', k) or ('a', orbit)
    edges: list[tuple[int, int, tuple]] = []
    for k in range(n):
        edges.append((k, (k + 1) % n, ("g", k)))
    for i in d.orbits():
        chain = [arrows[i][0]] + [v for _, v in sorted(along[i])] + [arrows[i][1]]
        for u, v in zip(chain, chain[1:]):
            edges.append((u, v, ("a", i)))

    # rotation system over half-edges (edge index, forward?)
    out: dict[int, list[tuple[float, int, bool]]] = {}
    for e, (u, v, lab) in enumerate(edges):
        for a, b, fwd in ((u, v, True), (v, u, False)):
            if lab[0] == "g":
                th = 2 * math.pi * a / n
                ang = th + (math.pi / 2 if fwd else -math.pi / 2)
            else:
                ang = math.atan2(coords[b][1] - coords[a][1], coords[b][0] - coords[a][0])
            out.setdefault(a, []).append((ang % (2 * math.pi), e, fwd))
    for a in out:
        out[a].sort()

    def head(h):
        e, fwd = h
        return edges[e][1] if fwd else edges[e][0]

    def nxt(h):
        # arrive at v through h, leave by the half-edge just clockwise of the reverse
        v = head(h)
        rot = out[v]
        idx = next(k for k, (_, e, f) in enumerate(rot) if e == h[0] and f != h[1])
        _, e2, f2 = rot[(idx - 1) % len(rot)]
        return (e2, f2)

    seen = set()
    cycles = []
    for e in range(len(edges)):
        for fwd in (True, False):
            h = (e, fwd)
            if h in seen:
                continue
            cyc = []
            while h not in seen:
                seen.add(h)
                cyc.append(h)
                h = nxt(h)
            cycles.append(cyc)

    interior = []
    outer = None
    for cyc in cycles:
        if all(edges[e][2][0] == "g" and not fwd for e, fwd in cyc):
            outer = cyc
        else:
            interior.append(cyc)
    assert outer is not None and len(outer) == n

    faces_raw = []
    for cyc in interior:
        # rotate so that the cycle starts at a gap when it has one
        gi = [k for k, (e, _) in enumerate(cyc) if edges[e][2][0] == "g"]
        if gi:
            start = min(gi, key=lambda k: edges[cyc[k][0]][2][1])
            cyc = cyc[start:] + cyc[:start]
        gaps, sides, cur = [], [], []
        ncross = 0
        for e, fwd in cyc:
            lab = edges[e][2]
            if lab[0] == "g":
                if gaps:
                    sides.append(tuple(cur))
                gaps.append(lab[1])
                cur = []
            else:
                cur.append((lab[1], 1 if fwd else -1))
            if head((e, fwd)) >= n:
                ncross += 1
        if gaps:
            sides.append(tuple(cur))
        else:
            sides = [tuple(cur)]
        faces_raw.append((tuple(gaps), tuple(sides), ncross))
    # deterministic face numbering: faces with gaps by least gap, then crossing-only faces
    faces_raw.sort(key=lambda f: (0, min(f[0])) if f[0] else (1, f[1]))
    faces = tuple(Face(k, g, s, c) for k, (g, s, c) in enumerate(faces_raw))
    gap_face = [0] * n
    for f in faces:
        for g in f.gaps:
            gap_face[g] = f.index
    return FaceComplex(d, len(coords), len(edges), faces, tuple(gap_face))


# -- reducing chords -------------------------------------------------------------


def _uniform(side) -> int:
    dirs = {s for _, s in side}
    return dirs.pop() if len(dirs) == 1 else 0


def is_reeb_strip(face: Face) -> bool:
    if len(face.gaps) != 2:
        return False
    d1, d2 = _uniform(face.sides[0]), _uniform(face.sides[1])
    # side 0 is walked from gap 0 to gap 1, side 1 back again: same walking
    # direction along the arrows means the flow is opposite on the two sides
    return d1 != 0 and d1 == d2


def reducing_chords(d: Diagram, fc: FaceComplex | None = None) -> list[Wall]:
    fc = fc or planarize(d)
    out = []
    for f in fc.faces:
        if is_reeb_strip(f):
            a, b = sorted(f.gaps)
            out += [Wall(a, b, (f.index,)), Wall(b, a, (f.index,))]
            continue
        for a, b in itertools.combinations(sorted(f.gaps), 2):
            out.append(Wall(a, b, (f.index,)))
    return sorted(out, key=lambda w: (w.route, min(w.a, w.b), max(w.a, w.b), w.a > w.b))


def chord_side(d: Diagram, w: Wall) -> frozenset[int]:
    """Orbits on the side of ``w`` holding endpoints a+1..b."""
    n = d.n
    k = (w.b - w.a) % n
    return frozenset(d.cyc[(w.a + 1 + off) % n].orbit for off in range(k))


def chord_split(d: Diagram, w: Wall) -> tuple[frozenset[int], frozenset[int]]:
    s = chord_side(d, w)
    return s, frozenset(d.orbits()) - s


def _gaps_interleave(a, b, c, e, n) -> bool:
    if len({a, b, c, e}) < 4:
        return False
    lo, hi = sorted((a, b))
    return (lo < c < hi) != (lo < e < hi)


def chords_disjoint(w1: Wall, w2: Wall, fc: FaceComplex) -> bool:
    if set(w1.route).isdisjoint(w2.route):
        return True
    return not _gaps_interleave(w1.a, w1.b, w2.a, w2.b, fc.diagram.n)


def walls_among(chords: list[Wall], fc: FaceComplex) -> list[Wall]:
    return [w for w in chords if all(chords_disjoint(w, c, fc) for c in chords if c != w)]


# -- areas -----------------------------------------------------------------------


def _place(walls: list[Wall], n: int) -> list[tuple[float, float]]:
    """Circle coordinates of wall endpoints, nested so that walls do not cross."""
    per_gap: dict[int, list[tuple[tuple, int, int]]] = {}
    for i, w in enumerate(walls):
        for end, (g, h) in enumerate(((w.a, w.b), (w.b, w.a))):
            dist = (h - g) % n
            # the copy holding the arc forward from g sits nearer to g+1
            hugs_forward = (g == w.a)
            per_gap.setdefault(g, []).append(((-dist, hugs_forward), i, end))
    coord = [[0.0, 0.0] for _ in walls]
    for g, items in per_gap.items():
        items.sort()
        for rank, (_, i, end) in enumerate(items):
            coord[i][end] = g + (rank + 1) / (len(items) + 1)
    return [tuple(c) for c in coord]


def _areas(d: Diagram, walls: list[Wall]) -> list[tuple[set[int], set[int]]]:
    """Areas of the disk cut along ``walls`` as (orbits, boundary wall indices)."""
    n = d.n
    coords = _place(walls, n)
    events = [(float(k), "p", k) for k in range(n)]
    for i, (u, v) in enumerate(coords):
        events.append((u, "w", i))
        events.append((v, "w", i))
    events.sort()
    m = len(events)
    # piece j lies between events[j] and events[j+1]
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    idx = {(kind, i, t): j for j, (t, kind, i) in enumerate(events)}
    for j, (t, kind, i) in enumerate(events):
        if kind == "p":
            union(j - 1 if j else m - 1, j)
    for i, (u, v) in enumerate(coords):
        ju, jv = idx[("w", i, u)], idx[("w", i, v)]
        lo, hi = sorted((ju, jv))
        union(lo, hi - 1)  # inside the arc
        union(lo - 1 if lo else m - 1, hi)  # outside the arc
    roots: dict[int, tuple[set[int], set[int]]] = {}
    order = []
    for j in range(m):
        rt = find(j)
        if rt not in roots:
            roots[rt] = (set(), set())
            order.append(rt)
    for j, (t, kind, i) in enumerate(events):
        prev = j - 1 if j else m - 1
        if kind == "p":
            roots[find(j)][0].add(d.cyc[i].orbit)
        else:
            roots[find(j)][1].add(i)
            roots[find(prev)][1].add(i)
    return [roots[rt] for rt in order]


def _same_block(d: Diagram, orbits, sign: int) -> bool:
    bidx = block_index(d)
    pos = d.positions()
    return len({bidx[pos[Endpoint(o, sign)]] for o in orbits}) == 1


def is_translation_set(d: Diagram, orbits) -> bool:
    """All minus ends in one adjacency block and all plus ends in one block."""
    return bool(orbits) and _same_block(d, orbits, MINUS) and _same_block(d, orbits, PLUS)


def constraint_violations(d: Diagram, orbits, n_boundary: int) -> list[int]:
    """Which of the three necessary conditions for an irreducible area fail.

    1: the orbits are all backward adjacent or all forward adjacent;
    2: fewer than two boundary walls;
    3: the orbits alternate once the other orbits are forgotten.
    """
    orbits = sorted(orbits)
    bad = []
    if _same_block(d, orbits, MINUS) or _same_block(d, orbits, PLUS):
        bad.append(1)
    if n_boundary < 2:
        bad.append(2)
    if len(orbits) >= 1 and alternates(restrict(d, orbits)):
        bad.append(3)
    return bad


def irreducible_constraints(d: Diagram, area: StableArea) -> list[int]:
    return constraint_violations(d, area.orbits, len(area.boundary))


def _assemble(d: Diagram, fc: FaceComplex, chords: list[Wall], realisation: str) -> DiagramWithWalls:
    walls = sorted(walls_among(chords, fc), key=lambda w: (w.route, w.a, w.b))
    areas = []
    for orbits, boundary in _areas(d, walls):
        if not orbits:
            kind = EMPTY
        elif is_translation_set(d, orbits):
            kind = TRANSLATION
        else:
            inner = [c for c in chords if c not in walls and len(chord_side(d, c) & orbits) not in (0, len(orbits))]
            ok = len(orbits) >= 2 and not inner and not constraint_violations(d, orbits, len(boundary))
            kind = IRREDUCIBLE if ok else UNRESOLVED
        areas.append(StableArea(tuple(sorted(orbits)), tuple(sorted(boundary)), kind))
    return DiagramWithWalls(d, tuple(walls), tuple(areas), tuple(chords), realisation)


def flow_walls(d: Diagram) -> DiagramWithWalls:
    fc = planarize(d)
    return _assemble(d, fc, reducing_chords(d, fc), "flow")


def candidate_sets(d: Diagram) -> list[frozenset[int]]:
    """Orbit sets passing conditions 1 and 3 for an irreducible area."""
    out = []
    for k in range(2, d.r):
        for s in itertools.combinations(d.orbits(), k):
            if not constraint_violations(d, s, 2):
                out.append(frozenset(s))
    return out


def compute_walls(d: Diagram) -> DiagramWithWalls:
    fc = planarize(d)
    chords = reducing_chords(d, fc)
    if not crossings(d):
        for s in candidate_sets(d):
            keep = [c for c in chords if len(chord_side(d, c) & s) in (0, len(s))]
            dw = _assemble(d, fc, keep, "irreducible")
            if any(a.kind == IRREDUCIBLE and frozenset(a.orbits) == s and len(a.boundary) >= 2 for a in dw.areas):
                return dw
    return _assemble(d, fc, chords, "flow")


def is_determinant(dw: DiagramWithWalls) -> bool:
    return not dw.irreducible()

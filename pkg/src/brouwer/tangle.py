"""
Curves on the cylinder with two marked points, seen as a sphere with four
punctures: the top end t, the bottom end b, and marked points p (above) and q.

A curve is stored by its normal coordinates, the intersection numbers with the
six edges of a fixed tetrahedral ideal triangulation.  In the pillowcase picture
the punctures sit at t=(0,0), p=(1,0), b=(0,1), q=(1,1) and the edges are

    E0 = t-p (horizontal)   E1 = b-q (horizontal)
    E2 = t-b (vertical)     E3 = p-q (vertical)
    E4 = t-q (diagonal)     E5 = p-b (diagonal)

Mapping classes act through flip sequences: each generator comes with the flips
that turn the triangulation into its image and the labels of the image edges.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

EDGES = ("E0", "E1", "E2", "E3", "E4", "E5")

# ccw triangles of the base triangulation, as edge labels
BASE = (("E0", "E3", "E4"), ("E4", "E1", "E2"), ("E0", "E2", "E5"), ("E5", "E1", "E3"))


class TangleError(ValueError):
    pass


@dataclass(frozen=True)
class Curve:
    coords: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        object.__setattr__(self, "coords", c)
        if len(c) != 6 or min(c) < 0:
            raise TangleError(f"bad coordinates {c}")
        if c[0] != c[1] or c[2] != c[3] or c[4] != c[5]:
            raise TangleError(f"opposite edges must agree: {c}")
        a, b, d = c[0], c[2], c[4]
        if sorted((a, b, d))[2] != sorted((a, b, d))[0] + sorted((a, b, d))[1]:
            raise TangleError(f"not a normal curve: {c}")
        if math.gcd(a, b) != 1:
            raise TangleError(f"coordinates {c} describe several parallel curves or none")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + ")"


# ---------------------------------------------------------------------------
# flips


def _flip(tris: list[tuple[str, ...]], vals: dict[str, int], e: str, f: str) -> None:
    """Flip edge e of the triangulation to a new edge f, updating both in place."""
    where = [k for k, t in enumerate(tris) if e in t]
    if len(where) != 2:
        raise TangleError(f"edge {e} is not flippable here")
    (k1, k2) = where

    def rot(t):
        i = t.index(e)
        return t[i:] + t[:i]

    _, a, b = rot(tris[k1])
    _, c, d = rot(tris[k2])
    vals[f] = max(vals[a] + vals[c], vals[b] + vals[d]) - vals[e]
    del vals[e]
    tris[k1] = (d, a, f)
    tris[k2] = (f, b, c)


@dataclass(frozen=True)
class Recipe:
    """Flips taking the base triangulation to the image of a mapping class, and
    the image label of each base edge."""

    flips: tuple[tuple[str, str], ...]
    image: dict

    def forward(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of phi(c) from those of c."""
        tris = [tuple(t) for t in BASE]
        for e, f in self.flips:
            _flip(tris, {x: 0 for t in tris for x in t}, e, f)
        vals = {self.image[E]: v[k] for k, E in enumerate(EDGES)}
        for e, f in reversed(self.flips):
            _flip(tris, vals, f, e)
        return tuple(vals[E] for E in EDGES)

    def backward(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of phi^{-1}(c) from those of c."""
        tris = [tuple(t) for t in BASE]
        vals = dict(zip(EDGES, v))
        for e, f in self.flips:
            _flip(tris, vals, e, f)
        return tuple(vals[self.image[E]] for E in EDGES)


# S: half twist exchanging p and q; H: half twist exchanging b and q about the
# horizontal core curve.  T = H^2 is the horizontal Dehn twist.
HALF_PQ = Recipe(
    flips=(("E0", "E0'"), ("E1", "E1'")),
    image={"E0": "E4", "E1": "E5", "E2": "E2", "E3": "E3", "E4": "E1'", "E5": "E0'"},
)
HALF_H = Recipe(
    flips=(("E2", "E2'"), ("E3", "E3'")),
    image={"E0": "E0", "E1": "E1", "E2": "E4", "E3": "E5", "E4": "E3'", "E5": "E2'"},
)


# ---------------------------------------------------------------------------
# words


LETTERS = ("S", "T", "Tt", "Tb")


@dataclass(frozen=True)
class MCGWord:
    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for name, k in self.letters:
            if name not in LETTERS:
                raise TangleError(f"unknown letter {name!r}")
            if k == 0:
                raise TangleError("exponents must be nonzero")

    def __mul__(self, other: "MCGWord") -> "MCGWord":
        return MCGWord(self.letters + other.letters)

    def inverse(self) -> "MCGWord":
        return MCGWord(tuple((n, -k) for n, k in reversed(self.letters)))

    def __str__(self) -> str:
        return format_word(self)


_LETTER_RE = re.compile(r"(Tt|Tb|S|T)(?:\^(-?\d+))?")


def parse_word(text: str) -> MCGWord:
    """Parse ``S^2 T^-1 Tt``; the empty string is the identity."""
    out = []
    for tok in text.split():
        m = _LETTER_RE.fullmatch(tok)
        if not m:
            raise TangleError(f"bad letter {tok!r}")
        k = int(m.group(2)) if m.group(2) is not None else 1
        if k:
            out.append((m.group(1), k))
    return MCGWord(tuple(out))


def format_word(w: MCGWord) -> str:
    return " ".join(n if k == 1 else f"{n}^{k}" for n, k in w.letters)


def _apply_letter(name: str, k: int, v: tuple[int, ...]) -> tuple[int, ...]:
    if name in ("Tt", "Tb"):
        # twists about curves bounding a once-punctured disc fix every curve
        return v
    recipe, reps = (HALF_PQ, abs(k)) if name == "S" else (HALF_H, 2 * abs(k))
    step = recipe.forward if k > 0 else recipe.backward
    for _ in range(reps):
        v = step(v)
    return v


def act(word: MCGWord, c: Curve) -> Curve:
    """Image of c; the rightmost letter acts first."""
    v = c.coords
    for name, k in reversed(word.letters):
        v = _apply_letter(name, k, v)
    return Curve(v)


# ---------------------------------------------------------------------------
# slopes


PARTITIONS = {(0, 1): "tp|bq", (1, 1): "tq|bp", (1, 0): "tb|pq"}


def curve_from_slope(p: int, q: int) -> Curve:
    """The curve of slope p/q: lines of direction (q, p) in the pillowcase."""
    if math.gcd(p, q) != 1:
        raise TangleError(f"slope {p}/{q} is not reduced")
    x, y = q, p
    return Curve((abs(y), abs(y), abs(x), abs(x), abs(x - y), abs(x - y)))


def slope(c: Curve) -> tuple[int, int, str]:
    """(p, q, partition) with q >= 0, and p = 1 when q = 0."""
    a, b, d = c.coords[0], c.coords[2], c.coords[4]
    if b == 0:
        p, q = 1, 0
    elif a == 0:
        p, q = 0, 1
    else:
        p, q = (a if d == abs(a - b) else -a), b
    return p, q, PARTITIONS[(p % 2, q % 2)]


GAMMA_STD = curve_from_slope(0, 1)


# ---------------------------------------------------------------------------
# tangles


@dataclass(frozen=True)
class Tangle:
    representative: Curve
    trivial: bool

    def notation(self) -> str:
        if self.trivial:
            return "tangle=trivial"
        p, q, part = slope(self.representative)
        return f"tangle={p}/{q}@{part}"

    def __str__(self) -> str:
        return self.notation()


_T = parse_word("T")
_T_INV = parse_word("T^-1")


def _tkey(c: Curve):
    return (c.coords[2], c.coords)


def normalize(c: Curve) -> Tangle:
    """Canonical member of the T-orbit: least intersection with the vertical
    edge E2, ties broken by the coordinate vector."""
    if c == GAMMA_STD:
        return Tangle(c, True)
    best = c
    for step in (_T, _T_INV):
        cur = c
        while True:
            nxt = act(step, cur)
            if nxt.coords[2] > cur.coords[2]:
                break
            cur = nxt
            if _tkey(cur) < _tkey(best):
                best = cur
    return Tangle(best, False)


def tangle_of(mu: MCGWord) -> Tangle:
    return normalize(act(mu, GAMMA_STD))


def tangle_equal(t1: Tangle, t2: Tangle) -> bool:
    return t1 == t2


def parse_tangle(text: str) -> Tangle:
    text = text.strip()
    if text == "tangle=trivial":
        return Tangle(GAMMA_STD, True)
    m = re.fullmatch(r"tangle=(-?\d+)/(\d+)@(tp\|bq|tq\|bp)", text)
    if not m:
        raise TangleError(f"cannot parse tangle {text!r}")
    c = curve_from_slope(int(m.group(1)), int(m.group(2)))
    if slope(c)[2] != m.group(3):
        raise TangleError(f"slope {m.group(1)}/{m.group(2)} has partition {slope(c)[2]}, not {m.group(3)}")
    t = normalize(c)
    return t


NON_CROSSING = "NonCrossingDiagram"
CROSSING = "CrossingDiagram"
NOT_APPLICABLE = "NotApplicable"


def adaptedness(t: Tangle) -> str:
    """Which kind of diagram the tangle is adapted to: p on the side of the top
    end gives a diagram without crossing, q there gives a crossing."""
    if t.trivial:
        return NOT_APPLICABLE
    part = slope(t.representative)[2]
    if part == "tp|bq":
        return NON_CROSSING
    if part == "tq|bp":
        return CROSSING
    raise TangleError("the tangle does not separate the marked points")

"""
The total invariant relative to four orbits: a diagram with walls together with
a tangle.  Couples are compared directly, realised by a flow diagram plus lifted
half twists, and read back from such a recipe.

Mapping classes of the cylinder with two marked points are handled in two
languages.  Braids on three strands fixing strand 3 (strands 1, 2 are the
marked points p, q; strand 3 is the bottom end) are where half twists and
linking numbers live; ``MCGWord`` is where curves are moved.  ``mcg_of_braid``
translates: sigma_1 -> S and A_{2,3} -> T^{-1}.  Braid words are read in time
order, so the translation reverses the order of letters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .braid import (
    BraidWord,
    HalfTwistFactor,
    crossing_counts,
    factor_free_half_twists,
    free_reduce,
    half_twist,
    identity,
    permutation,
    product,
    split_last_strand,
)
from .diagram import PLUS, Diagram, Endpoint, crossings, diagram_class, format_diagram, parse_diagram
from .walls import DiagramWithWalls, compute_walls, flow_walls
from .tangle import (
    CROSSING,
    GAMMA_STD,
    NON_CROSSING,
    Curve,
    MCGWord,
    Tangle,
    act,
    adaptedness,
    parse_tangle,
    slope,
    tangle_of,
)

ORBITS = 4


class ClassifyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# braids on the cylinder


def mcg_of_braid(b: BraidWord) -> MCGWord:
    if b.strands != 3:
        raise ClassifyError("cylinder braids have three strands")
    head, tail = split_last_strand(b)
    letters: list[tuple[str, int]] = []
    for x in head:
        letters.append(("S", 1 if x > 0 else -1))
    for y in tail:
        e = 1 if y > 0 else -1
        if abs(y) == 2:
            letters.append(("T", -e))
        else:
            # A_{1,3} = sigma_1^{-1} A_{2,3} sigma_1
            letters.extend([("S", -1), ("T", -e), ("S", 1)])
    return MCGWord(tuple(reversed(letters)))


def braid_of_mcg(w: MCGWord) -> BraidWord:
    """A braid on three strands mapping to ``w``; end twists are dropped."""
    out: list[int] = []
    for name, k in reversed(w.letters):
        if name == "S":
            out.extend([1 if k > 0 else -1] * abs(k))
        elif name == "T":
            out.extend([-2 if k > 0 else 2] * (2 * abs(k)))
    return BraidWord(3, tuple(out))


def last_strand_linking(b: BraidWord) -> int:
    """Half the signed crossings between the last strand and all the others."""
    m = b.strands
    cc = crossing_counts(b)
    total = sum(cc.get(frozenset((s, m)), 0) for s in range(1, m))
    return total // 2


# ---------------------------------------------------------------------------
# deflectors


@dataclass(frozen=True)
class Lift:
    factor: HalfTwistFactor
    domain: int

    def to_json(self) -> dict:
        return {"factor": self.factor.to_json(), "domain": self.domain}


def _moves():
    return [MCGWord(((n, k),)) for n in ("S", "T") for k in (1, -1)]


def straighten(c: Curve) -> MCGWord:
    """A word w with act(w, c) the horizontal core curve.

    Curves that put both marked points on the same side cannot be straightened.
    """
    if slope(c)[2] == "tb|pq":
        raise ClassifyError(f"curve {c} does not separate the marked points")
    word = MCGWord()
    size = lambda x: x.coords[0] + x.coords[2]  # noqa: E731
    while c != GAMMA_STD:
        best = min(_moves(), key=lambda m: (size(act(m, c)), str(m)))
        nxt = act(best, c)
        if size(nxt) >= size(c):
            raise ClassifyError(f"no straightening move for {c}")
        word, c = best * word, nxt
    return word


def deflector(alpha: Curve, beta: Curve) -> list[Lift]:
    """Disjointly supported lifts of half twists carrying the family of marked
    circles separated by ``alpha`` to the one separated by ``beta``.

    A family of two disjoint marked circles, each through one marked point and
    parallel to the ends, is encoded by the curve separating them.  The product
    of the lifted half twists maps alpha to beta up to horizontal twists.
    """
    psi = straighten(alpha)
    chi = straighten(beta)
    phi = chi.inverse() * psi
    hat = braid_of_mcg(phi)
    perm = permutation(hat)
    fix = identity(3) if perm[0] == 1 else BraidWord(3, (-1,))
    pure = BraidWord(3, free_reduce((fix * hat).word))
    factors, _ = factor_free_half_twists(pure)
    if perm[0] != 1:
        factors = [half_twist(identity(3), 1, 1)] + factors
    k = len(factors)
    return [Lift(f, k - j) for j, f in enumerate(factors)]


def lifts_word(lifts: Sequence[Lift]) -> BraidWord:
    return product((lf.factor.braid() for lf in lifts), 3)


# ---------------------------------------------------------------------------
# couples


@dataclass(frozen=True)
class InvariantCouple:
    dw: DiagramWithWalls
    tangle: Tangle

    def key(self) -> tuple[str, str, str]:
        return (format_diagram(self.dw.diagram), self.dw.wall_text(), self.tangle.notation())

    def to_json(self) -> dict:
        t = self.tangle.notation().removeprefix("tangle=")
        return {"diagram": format_diagram(self.dw.diagram), "walls": self.dw.wall_text(), "tangle": t}


def _check_r(d: Diagram) -> None:
    if d.r != ORBITS:
        raise ClassifyError(f"the total invariant is only defined for {ORBITS} orbits, got r={d.r}")


def make_couple(d: Diagram, t: Tangle) -> InvariantCouple:
    """The couple of a diagram and a tangle, with walls chosen to match: flow
    walls for the trivial tangle, the irreducible realisation otherwise."""
    _check_r(d)
    d = diagram_class(d)
    if t.trivial:
        dw = flow_walls(d)
        if dw.irreducible():
            raise ClassifyError(f"{format_diagram(d)} has no flow realisation, so its tangle cannot be trivial")
        return InvariantCouple(dw, t)
    dw = compute_walls(d)
    if not dw.irreducible():
        raise ClassifyError(f"{format_diagram(d)} has no irreducible area, so its tangle must be trivial")
    want = CROSSING if crossings(d) else NON_CROSSING
    if adaptedness(t) != want:
        raise ClassifyError(f"{t.notation()} is not adapted to {format_diagram(d)}")
    return InvariantCouple(dw, t)


def conjugate_equal(c1: InvariantCouple, c2: InvariantCouple) -> bool:
    return c1.key() == c2.key()


def parse_couple(data: dict | str) -> InvariantCouple:
    if isinstance(data, str):
        data = json.loads(data)
    d = parse_diagram(data["diagram"])
    t = str(data.get("tangle", "trivial"))
    tangle = parse_tangle(t if t.startswith("tangle=") else "tangle=" + t)
    c = make_couple(d, tangle)
    walls = data.get("walls")
    if walls is not None and walls != c.dw.wall_text() and diagram_class(d) == d:
        raise ClassifyError(f"walls {walls!r} do not match {c.dw.wall_text()!r}")
    return c


# ---------------------------------------------------------------------------
# recipes


def swap_plus_ends(d: Diagram, a: int, b: int) -> Diagram:
    swap = {Endpoint(a, PLUS): Endpoint(b, PLUS), Endpoint(b, PLUS): Endpoint(a, PLUS)}
    return Diagram(d.r, tuple(swap.get(e, e) for e in d.cyc))


@dataclass(frozen=True)
class Recipe:
    flow_diagram: Diagram
    pair: tuple[int, int]  # the two orbits carried by the half twists
    lifts: tuple[Lift, ...] = ()

    def to_json(self) -> dict:
        return {
            "flow": format_diagram(self.flow_diagram),
            "pair": list(self.pair),
            "lifts": [lf.to_json() for lf in self.lifts],
        }


def parse_recipe(data: dict | str) -> Recipe:
    if isinstance(data, str):
        data = json.loads(data)
    lifts = []
    for item in data.get("lifts", []):
        f = item["factor"]
        conj = BraidWord(3, tuple(f.get("conjugator", ())))
        lifts.append(Lift(half_twist(conj, int(f["core"]), int(f["sign"])), int(item["domain"])))
    pair = tuple(data.get("pair", (1, 2)))
    return Recipe(parse_diagram(data["flow"]), (int(pair[0]), int(pair[1])), tuple(lifts))


def invariant_of(rec: Recipe) -> InvariantCouple:
    if rec.lifts and crossings(rec.flow_diagram):
        raise ClassifyError("a flow diagram carrying lifts must have no crossing")
    doms = [lf.domain for lf in rec.lifts]
    if any(x <= y for x, y in zip(doms, doms[1:])):
        raise ClassifyError("lift domains must decrease strictly")
    t = tangle_of(mcg_of_braid(lifts_word(rec.lifts))) if rec.lifts else tangle_of(MCGWord())
    d = rec.flow_diagram
    if not t.trivial and adaptedness(t) == CROSSING:
        d = swap_plus_ends(d, *rec.pair)
    return make_couple(d, t)


def crossing_swap(d: Diagram) -> tuple[Diagram, tuple[int, int]]:
    """The non-crossing diagram obtained by exchanging the plus ends of the
    crossing pair, with that pair."""
    cs = crossings(d)
    if len(cs) != 1:
        raise ClassifyError(f"expected exactly one crossing pair, found {len(cs)}")
    a, b = sorted(next(iter(cs)))
    d2 = swap_plus_ends(d, a, b)
    if crossings(d2):
        raise ClassifyError("exchanging the plus ends left a crossing")
    return d2, (a, b)


def realize(c: InvariantCouple) -> Recipe:
    d = c.dw.diagram
    _check_r(d)
    if c.tangle.trivial:
        if c.dw.irreducible():
            raise ClassifyError("a trivial tangle needs a diagram with walls without irreducible area")
        return Recipe(d, (1, 2))
    areas = c.dw.irreducible()
    if len(areas) != 1 or len(areas[0].orbits) != 2:
        raise ClassifyError("expected one irreducible area with two orbits")
    pair = tuple(sorted(areas[0].orbits))
    want = CROSSING if crossings(d) else NON_CROSSING
    if adaptedness(c.tangle) != want:
        raise ClassifyError(f"{c.tangle.notation()} is not adapted to the diagram; the couple is not realised")
    if crossings(d):
        flow, swapped = crossing_swap(d)
        if set(swapped) != set(pair):
            raise ClassifyError("the crossing pair is not the irreducible pair")
    else:
        flow = d
    lifts = deflector(GAMMA_STD, c.tangle.representative)
    return Recipe(flow, pair, tuple(lifts))


def generate_distinct(dw: DiagramWithWalls, k: int) -> list[InvariantCouple]:
    """k pairwise distinct couples on the same diagram, from the tangles of
    S^2, S^4, ... (no crossing) or S^3, S^5, ... (crossing)."""
    if k < 1:
        raise ValueError("k must be positive")
    d = dw.diagram
    _check_r(d)
    if not dw.irreducible():
        raise ValueError("the diagram with walls is determinant")
    odd = 1 if crossings(d) else 0
    out = []
    for j in range(1, k + 1):
        t = tangle_of(MCGWord((("S", 2 * j + odd),)))
        out.append(make_couple(d, t))
    return out

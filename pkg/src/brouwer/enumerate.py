"""
Exhaustive generation and classification of diagrams with r orbits.

Diagrams are generated at the block level: a cyclic sign pattern with r' minus
blocks and r' plus blocks, and a table counting the arrows between each minus
block and each plus block.  The table fixes the diagram up to the block-internal
order, which ``reduce_crossings`` then settles.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .diagram import (
    MINUS,
    PLUS,
    Diagram,
    Endpoint,
    adjacency_profile,
    crossings,
    diagram_class,
    format_diagram,
)
from .walls import EMPTY, IRREDUCIBLE, TRANSLATION, DiagramWithWalls, compute_walls, irreducible_constraints

DETERMINANT = "Determinant-Flow"
NON_DETERMINANT = "NonDeterminant"
UNCONSTRAINED = "Unconstrained"

VALIDATED_MAX_R = 4


def _compositions(total: int, parts: int):
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _tables(rows: tuple[int, ...], cols: tuple[int, ...]):
    """Non-negative integer matrices with the given row and column sums."""
    if not rows:
        if not any(cols):
            yield ()
        return
    first, rest = rows[0], rows[1:]

    def fill(k, left, cols_left):
        if k == len(cols_left):
            if left == 0:
                yield ()
            return
        for x in range(min(left, cols_left[k]) + 1):
            for tail in fill(k + 1, left - x, cols_left):
                yield (x,) + tail

    for row in fill(0, first, cols):
        remaining = tuple(c - x for c, x in zip(cols, row))
        for tail in _tables(rest, remaining):
            yield (row,) + tail


def _word_from_table(minus_sizes, plus_sizes, table) -> Diagram:
    rp = len(minus_sizes)
    slots: list[list[int | None]] = []
    for k in range(rp):
        slots.append([None] * minus_sizes[k])
        slots.append([None] * plus_sizes[k])
    orbit = 0
    fill = [0] * (2 * rp)
    for x in range(rp):
        for y in range(rp):
            for _ in range(table[x][y]):
                orbit += 1
                slots[2 * x][fill[2 * x]] = -orbit
                fill[2 * x] += 1
                slots[2 * y + 1][fill[2 * y + 1]] = orbit
                fill[2 * y + 1] += 1
    cyc = tuple(Endpoint(abs(t), MINUS if t < 0 else PLUS) for blk in slots for t in blk)
    return Diagram(orbit, cyc)


def _sort_key(d: Diagram):
    return [e.key() for e in d.cyc]


@lru_cache(maxsize=None)
def _enumerate(r: int) -> tuple[Diagram, ...]:
    found = set()
    for rp in range(1, r + 1):
        for ms in _compositions(r, rp):
            for ps in _compositions(r, rp):
                for table in _tables(ms, ps):
                    d = _word_from_table(ms, ps, table)
                    # blocks of an adjacent pair may merge only if a size is zero, which compositions exclude
                    found.add(diagram_class(d))
    return tuple(sorted(found, key=_sort_key))


def enumerate_diagrams(r: int) -> list[Diagram]:
    """Canonical diagrams with r orbits, one per class, in lexicographic order."""
    if r < 1:
        raise ValueError(f"need at least one orbit, got {r}")
    return list(_enumerate(r))


def obstruction(d: Diagram, dw: DiagramWithWalls | None = None) -> str | None:
    """Reason why no Brouwer mapping class has diagram ``d``, or None.

    An area with two or more orbits that is not a translation area must be
    irreducible; when its orbits fail one of the necessary conditions the diagram
    is not realised.
    """
    dw = dw or compute_walls(d)
    for a in dw.areas:
        if a.kind in (TRANSLATION, EMPTY, IRREDUCIBLE):
            continue
        bad = irreducible_constraints(d, a)
        if bad:
            return f"area {list(a.orbits)} is not a translation area and fails irreducibility condition(s) {bad}"
        return f"area {list(a.orbits)} is neither translation nor irreducible"
    return None


@dataclass(frozen=True)
class Classified:
    dw: DiagramWithWalls
    verdict: str
    obstruction: str | None
    forbidden: bool = False
    note: str | None = None

    @property
    def diagram(self) -> Diagram:
        return self.dw.diagram

    @property
    def flow_realisable_and_distinct(self) -> bool:
        return self.verdict == DETERMINANT and not self.forbidden

    def report(self) -> dict:
        d = self.diagram
        out = {
            "diagram": format_diagram(d),
            "rprime": adjacency_profile(d).r_prime,
            "crossings": sorted(sorted(c) for c in crossings(d)),
            "walls": self.dw.wall_text(),
            "verdict": self.verdict,
        }
        if self.obstruction:
            out["obstruction"] = self.obstruction
        if self.note:
            out["note"] = self.note
        if self.forbidden:
            out["annotation"] = "forbidden"
        if d.r > VALIDATED_MAX_R:
            out["walls_status"] = "best-effort"
        return out


def classify(d: Diagram, forbidden: frozenset[str] = frozenset()) -> Classified:
    dw = compute_walls(d)
    why = obstruction(d, dw)
    note = None
    if why and adjacency_profile(d).r_prime in (1, 2, d.r):
        # few adjacency blocks or alternating orbits force a flow; the chord model
        # cannot draw the reducing lines of such a flow when its arrows cross
        note = f"flow since r' is 1, 2 or r; chord model: {why}"
        why = None
        verdict = DETERMINANT
    elif why:
        verdict = UNCONSTRAINED
    elif not dw.irreducible():
        verdict = DETERMINANT
    elif d.r <= VALIDATED_MAX_R:
        verdict = NON_DETERMINANT
    else:
        verdict = UNCONSTRAINED
    return Classified(dw, verdict, why, format_diagram(d) in forbidden, note)


def classify_all(r: int, forbidden: frozenset[str] = frozenset()) -> list[Classified]:
    return [classify(d, forbidden) for d in enumerate_diagrams(r)]


def load_annotations(path: str | Path) -> frozenset[str]:
    """Read a JSON list of canonical diagram strings marked forbidden.

    Entries may be plain strings or ``{"diagram": ..., "mark": "forbidden"}``.
    """
    data = json.loads(Path(path).read_text())
    out = set()
    for item in data:
        if isinstance(item, str):
            out.add(item)
        elif item.get("mark", "forbidden") == "forbidden":
            out.add(item["diagram"])
    return frozenset(out)


def census(r: int = 4) -> dict:
    rows = classify_all(r)
    nd = [c for c in rows if c.verdict == NON_DETERMINANT]
    return {
        "r": r,
        "diagrams": len(rows),
        "non_determinant": len(nd),
        "crossing_non_determinant": sum(1 for c in nd if crossings(c.diagram)),
        "obstructed": sum(1 for c in rows if c.obstruction),
        "by_rprime": {
            k: sum(1 for c in rows if adjacency_profile(c.diagram).r_prime == k) for k in range(1, r + 1)
        },
    }

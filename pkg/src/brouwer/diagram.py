"""
Brouwer diagrams as cyclic words of signed orbit endpoints.

A diagram on r orbits is a cyclic sequence of 2r endpoints; orbit i contributes
one backward end ``i-`` and one forward end ``i+``, and the arrow of orbit i runs
from ``i-`` to ``i+``. Two words describe the same diagram when they differ by a
rotation, a relabelling of the orbits, or a permutation of endpoints inside one
maximal run of equal signs (an adjacency block).  Reflections are not allowed.

The canonical form only quotients rotations and relabellings.  Permutations inside
blocks are handled by ``reduce_crossings``, which puts each block in the order that
leaves only the crossings forced by the block structure.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

MINUS = -1
PLUS = 1


class Endpoint(NamedTuple):
    orbit: int
    sign: int  # MINUS or PLUS

    def key(self) -> tuple[int, int]:
        # minus ends sort before plus ends, then by label
        return (self.sign, self.orbit)

    def __str__(self) -> str:
        return f"{self.orbit}{'-' if self.sign == MINUS else '+'}"


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Diagram:
    r: int
    cyc: tuple[Endpoint, ...]

    def __post_init__(self):
        if self.r < 1:
            raise DiagramError(f"r must be positive, got {self.r}")
        if len(self.cyc) != 2 * self.r:
            raise DiagramError(f"expected {2 * self.r} endpoints, got {len(self.cyc)}")
        seen = set()
        for e in self.cyc:
            if not 1 <= e.orbit <= self.r:
                raise DiagramError(f"orbit {e.orbit} outside 1..{self.r}")
            if e.sign not in (MINUS, PLUS):
                raise DiagramError(f"bad sign {e.sign}")
            if e in seen:
                raise DiagramError(f"orbit {e.orbit} has two {'minus' if e.sign == MINUS else 'plus'} ends")
            seen.add(e)

    @property
    def n(self) -> int:
        return 2 * self.r

    def __str__(self) -> str:
        return format_diagram(self)

    def positions(self) -> dict[Endpoint, int]:
        return {e: k for k, e in enumerate(self.cyc)}

    def arrow(self, orbit: int) -> tuple[int, int]:
        """Positions (minus end, plus end) of the arrow of ``orbit``."""
        pos = self.positions()
        return pos[Endpoint(orbit, MINUS)], pos[Endpoint(orbit, PLUS)]

    def orbits(self) -> range:
        return range(1, self.r + 1)


def make_diagram(tokens: Sequence[int] | Sequence[Endpoint]) -> Diagram:
    """Build a diagram from endpoints or from signed ints (``-2`` is ``2-``)."""
    cyc = tuple(t if isinstance(t, Endpoint) else Endpoint(abs(t), MINUS if t < 0 else PLUS) for t in tokens)
    if len(cyc) % 2:
        raise DiagramError("odd number of endpoints")
    return Diagram(len(cyc) // 2, cyc)


_DIAGRAM_RE = re.compile(r"r=(\d+); cyc=(.*)")
_TOKEN_RE = re.compile(r"(\d+)([-+])")


def parse_diagram(text: str) -> Diagram:
    m = _DIAGRAM_RE.fullmatch(text.strip())
    if not m:
        raise DiagramError(f"cannot parse diagram {text!r}")
    r = int(m.group(1))
    toks = m.group(2).split(" ")
    cyc = []
    for tok in toks:
        tm = _TOKEN_RE.fullmatch(tok)
        if not tm:
            raise DiagramError(f"malformed token {tok!r}")
        cyc.append(Endpoint(int(tm.group(1)), MINUS if tm.group(2) == "-" else PLUS))
    return Diagram(r, tuple(cyc))


def format_diagram(d: Diagram) -> str:
    return f"r={d.r}; cyc=" + " ".join(str(e) for e in d.cyc)


def rotate(d: Diagram, k: int) -> Diagram:
    k %= d.n
    return Diagram(d.r, d.cyc[k:] + d.cyc[:k])


def relabel(d: Diagram, perm: dict[int, int]) -> Diagram:
    return Diagram(d.r, tuple(Endpoint(perm[e.orbit], e.sign) for e in d.cyc))


def _first_appearance(cyc: Sequence[Endpoint]) -> tuple[Endpoint, ...]:
    lab: dict[int, int] = {}
    out = []
    for e in cyc:
        if e.orbit not in lab:
            lab[e.orbit] = len(lab) + 1
        out.append(Endpoint(lab[e.orbit], e.sign))
    return tuple(out)


def canonical_form(d: Diagram) -> Diagram:
    # For a fixed rotation the least relabelling numbers orbits by first appearance.
    best = None
    for k in range(d.n):
        cand = _first_appearance(d.cyc[k:] + d.cyc[:k])
        if best is None or [e.key() for e in cand] < [e.key() for e in best]:
            best = cand
    return Diagram(d.r, best)


def canonical_relabelling(d: Diagram) -> tuple[int, dict[int, int]]:
    """Rotation offset and orbit map taking ``d`` to ``canonical_form(d)``.

    When the diagram has symmetries the first minimising rotation is returned.
    """
    best = None
    for k in range(d.n):
        rot = d.cyc[k:] + d.cyc[:k]
        cand = [e.key() for e in _first_appearance(rot)]
        if best is None or cand < best[0]:
            lab: dict[int, int] = {}
            for e in rot:
                lab.setdefault(e.orbit, len(lab) + 1)
            best = (cand, k, lab)
    return best[1], best[2]


def automorphisms(d: Diagram) -> list[tuple[int, dict[int, int]]]:
    """All (rotation, relabelling) pairs fixing the word of ``d``."""
    out = []
    for k in range(d.n):
        rot = d.cyc[k:] + d.cyc[:k]
        perm = {}
        for a, b in zip(d.cyc, rot):
            if a.sign != b.sign or perm.setdefault(b.orbit, a.orbit) != a.orbit:
                break
        else:
            out.append((k, perm))
    return out


@dataclass(frozen=True)
class Block:
    sign: int
    start: int  # position of the first endpoint of the run
    orbits: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.orbits)


@dataclass(frozen=True)
class AdjacencyProfile:
    blocks: tuple[Block, ...]

    @property
    def r_prime(self) -> int:
        return len(self.blocks) // 2


def adjacency_profile(d: Diagram) -> AdjacencyProfile:
    n = d.n
    # start at the first position whose predecessor has the other sign
    start = next(k for k in range(n) if d.cyc[k].sign != d.cyc[k - 1].sign)
    blocks: list[Block] = []
    for off in range(n):
        k = (start + off) % n
        e = d.cyc[k]
        if blocks and blocks[-1].sign == e.sign:
            b = blocks[-1]
            blocks[-1] = Block(b.sign, b.start, b.orbits + (e.orbit,))
        else:
            blocks.append(Block(e.sign, k, (e.orbit,)))
    return AdjacencyProfile(tuple(blocks))


def block_index(d: Diagram) -> dict[int, int]:
    """Map each position to the index of its adjacency block."""
    out = {}
    for i, b in enumerate(adjacency_profile(d).blocks):
        for off in range(len(b)):
            out[(b.start + off) % d.n] = i
    return out


def _interleave(a: tuple[int, int], b: tuple[int, int]) -> bool:
    lo, hi = sorted(a)
    return (lo < b[0] < hi) != (lo < b[1] < hi)


def crossings(d: Diagram) -> set[frozenset[int]]:
    arrows = {i: d.arrow(i) for i in d.orbits()}
    return {
        frozenset((i, j))
        for i, j in itertools.combinations(d.orbits(), 2)
        if _interleave(arrows[i], arrows[j])
    }


def reduce_crossings(d: Diagram) -> Diagram:
    """Reorder each adjacency block so that only forced crossings remain.

    Inside a block, endpoints are sorted so that partners further along the circle
    come first; arrows joining the same two blocks are nested.  The result is unique
    up to relabelling of parallel arrows.
    """
    n = d.n
    prof = adjacency_profile(d)
    bidx = block_index(d)
    pos = d.positions()

    def partner_block(orbit: int, sign: int) -> int:
        return bidx[pos[Endpoint(orbit, -sign)]]

    cyc = list(d.cyc)
    for b in prof.blocks:
        def key(orbit: int, b=b) -> tuple[int, int]:
            pb = prof.blocks[partner_block(orbit, b.sign)]
            dist = (pb.start - b.start) % n
            # parallel arrows: ascending label in the minus block, descending in the plus block
            return (-dist, orbit if b.sign == MINUS else -orbit)

        for off, orbit in enumerate(sorted(b.orbits, key=key)):
            cyc[(b.start + off) % n] = Endpoint(orbit, b.sign)
    return Diagram(d.r, tuple(cyc))


def is_reduced(d: Diagram) -> bool:
    return len(crossings(d)) == len(crossings(reduce_crossings(d)))


def diagram_class(d: Diagram) -> Diagram:
    """Canonical representative of the diagram up to rotation, relabelling and
    permutations inside adjacency blocks."""
    return canonical_form(reduce_crossings(d))


def restrict(d: Diagram, orbits: Iterable[int]) -> Diagram:
    """Sub-diagram on a subset of orbits, relabelled 1..k in increasing order."""
    keep = sorted(set(orbits))
    lab = {o: i + 1 for i, o in enumerate(keep)}
    return Diagram(len(keep), tuple(Endpoint(lab[e.orbit], e.sign) for e in d.cyc if e.orbit in lab))


def alternates(d: Diagram) -> bool:
    return adjacency_profile(d).r_prime == d.r

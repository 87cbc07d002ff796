"""
Braid words, the Garside word problem, linking numbers, combing and
factorisation into half twists that avoid the last strand.

Conventions.  Strands are numbered 1..m by their starting position.  The word
``(k, -k)`` is sigma_k sigma_k^{-1}; words are read left to right, the left letter
happening first.  A positive letter sigma_k is a crossing of sign +1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError(f"need at least 2 strands, got {self.strands}")
        object.__setattr__(self, "word", tuple(int(x) for x in self.word))
        for x in self.word:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(f"generator {x} outside 1..{self.strands - 1}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        _same(self, other)
        return BraidWord(self.strands, self.word + other.word)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.word * abs(k))

    def __len__(self) -> int:
        return len(self.word)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.word)))

    def __str__(self) -> str:
        return format_braid(self)


def _same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise BraidError(f"strand mismatch: {a.strands} vs {b.strands}")


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def product(words: Iterable[BraidWord], strands: int) -> BraidWord:
    out: list[int] = []
    for w in words:
        if w.strands != strands:
            raise BraidError(f"strand mismatch: {w.strands} vs {strands}")
        out.extend(w.word)
    return BraidWord(strands, tuple(out))


def free_reduce(word: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


_BRAID_RE = re.compile(r"\s*n\s*=\s*(\d+)\s*:\s*\[(.*)\]\s*")


def parse_braid(text: str) -> BraidWord:
    """Parse ``n=3: [1,2,-1]``."""
    m = _BRAID_RE.fullmatch(text)
    if not m:
        raise BraidError(f"cannot parse braid {text!r}")
    body = m.group(2).strip()
    try:
        word = tuple(int(t) for t in body.split(",")) if body else ()
    except ValueError as exc:
        raise BraidError(f"bad generator list {body!r}") from exc
    return BraidWord(int(m.group(1)), word)


def format_braid(b: BraidWord) -> str:
    return f"n={b.strands}: [{','.join(str(x) for x in b.word)}]"


# ---------------------------------------------------------------------------
# permutations and strand bookkeeping


def permutation(b: BraidWord) -> tuple[int, ...]:
    """``perm[s-1]`` is the end position of the strand starting at position s."""
    at = list(range(1, b.strands + 1))  # at[pos-1] = strand currently at pos
    for x in b.word:
        k = abs(x)
        at[k - 1], at[k] = at[k], at[k - 1]
    perm = [0] * b.strands
    for pos, s in enumerate(at, start=1):
        perm[s - 1] = pos
    return tuple(perm)


def is_pure(b: BraidWord) -> bool:
    return permutation(b) == tuple(range(1, b.strands + 1))


def _require_pure(b: BraidWord) -> None:
    if not is_pure(b):
        raise BraidError(f"braid {format_braid(b)} is not pure (permutation {permutation(b)})")


def crossing_counts(b: BraidWord) -> dict[frozenset[int], int]:
    """Signed crossing count for each pair of strands."""
    at = list(range(1, b.strands + 1))
    out: dict[frozenset[int], int] = {}
    for x in b.word:
        k = abs(x)
        pair = frozenset((at[k - 1], at[k]))
        out[pair] = out.get(pair, 0) + (1 if x > 0 else -1)
        at[k - 1], at[k] = at[k], at[k - 1]
    return out


def linking(b: BraidWord, i: int, j: int) -> int:
    _require_pure(b)
    if i == j or not (1 <= i <= b.strands and 1 <= j <= b.strands):
        raise BraidError(f"bad strand pair ({i}, {j})")
    c = crossing_counts(b).get(frozenset((i, j)), 0)
    # in a pure braid two strands cross an even number of times
    return c // 2


def epsilon_i(b: BraidWord, i: int) -> int:
    return linking(b, i, b.strands)


def epsilon_vector(b: BraidWord) -> list[int]:
    _require_pure(b)
    cc = crossing_counts(b)
    m = b.strands
    return [cc.get(frozenset((i, m)), 0) // 2 for i in range(1, m)]


def epsilon_total(b: BraidWord) -> int:
    return sum(epsilon_vector(b))


# ---------------------------------------------------------------------------
# Garside normal form
#
# A simple element is a permutation braid, stored in one-line notation as a
# tuple p of 0-based values.  Right multiplication by s_k swaps p[k-1] and p[k];
# left multiplication swaps the values k-1 and k.


def _top(m: int) -> tuple[int, ...]:
    return tuple(range(m - 1, -1, -1))


def _right_descents(p: tuple[int, ...]) -> set[int]:
    return {k for k in range(1, len(p)) if p[k - 1] > p[k]}


def _left_descents(p: tuple[int, ...]) -> set[int]:
    where = {v: i for i, v in enumerate(p)}
    return {k for k in range(1, len(p)) if where[k] < where[k - 1]}


def _times_s(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    q = list(p)
    q[k - 1], q[k] = q[k], q[k - 1]
    return tuple(q)


def _s_times(k: int, p: tuple[int, ...]) -> tuple[int, ...]:
    swap = {k - 1: k, k: k - 1}
    return tuple(swap.get(v, v) for v in p)


def _flip(p: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by the Garside element: s_k -> s_{m-k}."""
    m = len(p)
    return tuple(m - 1 - p[m - 1 - i] for i in range(m))


def simple_word(p: tuple[int, ...]) -> tuple[int, ...]:
    """A positive word for the permutation braid ``p`` (bubble sort)."""
    q = list(p)
    letters: list[int] = []
    # peel right descents until identity; collected letters are read right to left
    while True:
        for k in range(1, len(q)):
            if q[k - 1] > q[k]:
                q[k - 1], q[k] = q[k], q[k - 1]
                letters.append(k)
                break
        else:
            break
    return tuple(reversed(letters))


@dataclass(frozen=True)
class NormalForm:
    strands: int
    infimum: int
    factors: tuple[tuple[int, ...], ...]

    def word(self) -> BraidWord:
        top = simple_word(_top(self.strands))
        head = top * self.infimum if self.infimum >= 0 else tuple(-x for x in reversed(top)) * -self.infimum
        body = tuple(x for f in self.factors for x in simple_word(f))
        return BraidWord(self.strands, head + body)

    def __str__(self) -> str:
        fs = " ".join("[" + ",".join(str(x) for x in simple_word(f)) + "]" for f in self.factors)
        return f"Delta^{self.infimum}" + (f" {fs}" if fs else "")


def _left_weight(factors: list[tuple[int, ...]]) -> bool:
    changed = False
    for i in range(len(factors) - 1):
        a, b = factors[i], factors[i + 1]
        while True:
            move = _left_descents(b) - _right_descents(a)
            if not move:
                break
            k = min(move)
            a, b = _times_s(a, k), _s_times(k, b)
            changed = True
        factors[i], factors[i + 1] = a, b
    return changed


def normal_form(b: BraidWord) -> NormalForm:
    m = b.strands
    top = _top(m)
    ident = tuple(range(m))
    inf = 0
    factors: list[tuple[int, ...]] = []
    for x in b.word:
        if x > 0:
            factors.append(_times_s(ident, x))
        else:
            # sigma^{-1} = Delta^{-1} (Delta sigma^{-1}); move Delta^{-1} to the front
            factors = [_flip(f) for f in factors]
            factors.append(_times_s(top, -x))
            inf -= 1
    while _left_weight(factors):
        pass
    while factors and factors[0] == top:
        factors.pop(0)
        inf += 1
    while factors and factors[-1] == ident:
        factors.pop()
    return NormalForm(m, inf, tuple(factors))


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    _same(a, b)
    return normal_form(a) == normal_form(b)


# ---------------------------------------------------------------------------
# pure braid generators and band generators


def a_gen(i: int, j: int, strands: int) -> BraidWord:
    """A_{i,j} = s_{i-1} ... s_{j+1} s_j^2 s_{j+1}^{-1} ... s_{i-1}^{-1}, for j < i."""
    if not 1 <= j < i <= strands:
        raise BraidError(f"a_gen needs 1 <= j < i <= {strands}, got ({i}, {j})")
    head = tuple(range(i - 1, j, -1))
    return BraidWord(strands, head + (j, j) + tuple(-x for x in reversed(head)))


def a_letter(j: int, k: int, strands: int, power: int = 1) -> BraidWord:
    """A_{j,k}^power with j < k, the letter used in combed words."""
    return a_gen(k, j, strands) ** power


def sigma_band(i: int, j: int, strands: int) -> BraidWord:
    """Positive half twist exchanging strands i < j along a band that passes
    over the strands between them: s_{j-1}...s_{i+1} s_i s_{i+1}^{-1}...s_{j-1}^{-1}."""
    if not 1 <= i < j <= strands:
        raise BraidError(f"sigma_band needs 1 <= i < j <= {strands}, got ({i}, {j})")
    head = tuple(range(j - 1, i, -1))
    return BraidWord(strands, head + (i,) + tuple(-x for x in reversed(head)))


def oriented_band(i: int, j: int, strands: int) -> BraidWord:
    """Half twist of the pair (i, j) with an orientation: sigma_band for i > j and
    its inverse for i < j, so that swapping the arguments inverts the braid."""
    if i == j:
        raise BraidError("oriented_band needs distinct strands")
    return sigma_band(j, i, strands) if i > j else sigma_band(i, j, strands).inverse()


def conjugation_identity(i: int, j: int, k: int, strands: int) -> tuple[BraidWord, BraidWord]:
    """Both sides of A_{i,m}^k A_{j,m}^{-k} = s_{j,m}^{2k} s_{i,j} s_{j,m}^{-2k} s_{i,j}^{-1},
    m = strands, with s_{i,j} = sigma_band on the sorted pair.

    This is the identity as commonly written.  It does not hold in the braid
    group for k != 0: the two sides have opposite linking numbers.  See
    ``commutator_identity`` for the form that does.
    """
    m = strands
    if not (1 <= i <= m - 1 and 1 <= j <= m - 1 and i != j):
        raise BraidError(f"need distinct i, j in 1..{m - 1}, got ({i}, {j})")
    lhs = a_gen(m, i, m) ** k * a_gen(m, j, m) ** (-k)
    s = sigma_band(min(i, j), max(i, j), m)
    t = sigma_band(j, m, m) ** (2 * k)
    return lhs, t * s * t.inverse() * s.inverse()


def commutator_identity(i: int, j: int, k: int, strands: int) -> tuple[BraidWord, BraidWord]:
    """Both sides of A_{i,m}^k A_{j,m}^{-k} = s s_{j,m}^{2k} s^{-1} s_{j,m}^{-2k},
    with s = oriented_band(i, j) and s_{j,m} = sigma_band(j, m)."""
    m = strands
    if not (1 <= i <= m - 1 and 1 <= j <= m - 1 and i != j):
        raise BraidError(f"need distinct i, j in 1..{m - 1}, got ({i}, {j})")
    lhs = a_gen(m, i, m) ** k * a_gen(m, j, m) ** (-k)
    s = oriented_band(i, j, m)
    t = sigma_band(j, m, m) ** (2 * k)
    return lhs, s * t * s.inverse() * t.inverse()


# ---------------------------------------------------------------------------
# combing


# Conjugating A_{q,m} by a letter on the first m-1 strands, written in the
# letters A_{.,m} (signed q means A_{q,m}^{+-1}).
def _conj_letter(x: int, q: int) -> tuple[int, ...]:
    """The word for x^{-1} A_{q,m} x."""
    i = abs(x)
    if q not in (i, i + 1):
        return (q,)
    if x > 0:
        return (i, i + 1, -i) if q == i else (i,)
    return (i + 1,) if q == i else (-(i + 1), i, i + 1)


def _conj_word(x: int, word: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for y in word:
        img = _conj_letter(x, abs(y))
        out.extend(img if y > 0 else tuple(-z for z in reversed(img)))
    return free_reduce(out)


def split_last_strand(b: BraidWord) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Write a braid fixing the last strand as (u, v): u a word on the first m-1
    strands and v a word in the letters A_{q,m}, with b = u . v.

    The last strand is pulled back to the right edge after every letter; the
    detours it makes become A letters, which are then moved to the right.
    """
    m = b.strands
    if permutation(b)[m - 1] != m:
        raise BraidError("the last strand must end where it starts")
    p = m
    head: list[int] = []
    tail: tuple[int, ...] = ()
    for x in b.word:
        k, e = abs(x), (1 if x > 0 else -1)
        if k == p - 1:
            p -= 1
            if e < 0:
                tail = free_reduce(tail + (-p,))
        elif k == p:
            if e > 0:
                tail = free_reduce(tail + (p,))
            p += 1
        else:
            y = x if k < p else x - e
            tail = _conj_word(y, tail)
            head.append(y)
    return tuple(head), tail


@dataclass(frozen=True)
class CombedForm:
    strands: int
    # betas[k] for k = 2..strands: signed j stands for A_{j,k}^{+-1}
    betas: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def beta_word(self, k: int) -> BraidWord:
        out: list[int] = []
        for y in self.betas.get(k, ()):
            out.extend(a_letter(abs(y), k, self.strands, 1 if y > 0 else -1).word)
        return BraidWord(self.strands, tuple(out))

    def product(self) -> BraidWord:
        return product((self.beta_word(k) for k in range(2, self.strands + 1)), self.strands)

    def text(self) -> str:
        parts = []
        for k in range(2, self.strands + 1):
            letters = [f"A{abs(y)},{k}" + ("" if y > 0 else "^-1") for y in self.betas.get(k, ())]
            parts.append(f"b{k}=" + (" ".join(letters) if letters else "1"))
        return "; ".join(parts)


def comb(b: BraidWord) -> CombedForm:
    """Artin combing b = beta_2 ... beta_m with beta_k in the free group on A_{j,k}, j < k."""
    _require_pure(b)
    betas: dict[int, tuple[int, ...]] = {}
    word = b.word
    for k in range(b.strands, 1, -1):
        head, tail = split_last_strand(BraidWord(k, word))
        betas[k] = tail
        word = head
    return CombedForm(b.strands, dict(sorted(betas.items())))


# ---------------------------------------------------------------------------
# half twists avoiding the last strand


@dataclass(frozen=True)
class HalfTwistFactor:
    conjugator: BraidWord
    core: int
    sign: int
    support: frozenset[int]
    avoid: int

    def braid(self) -> BraidWord:
        c = self.conjugator
        return c * BraidWord(c.strands, (self.sign * self.core,)) * c.inverse()

    def to_json(self) -> dict:
        return {
            "conjugator": list(self.conjugator.word),
            "core": self.core,
            "sign": self.sign,
            "support": sorted(self.support),
        }


def half_twist(conjugator: BraidWord, core: int, sign: int) -> HalfTwistFactor:
    m = conjugator.strands
    f = conjugator * BraidWord(m, (sign * core,)) * conjugator.inverse()
    perm = permutation(f)
    moved = frozenset(s for s in range(1, m + 1) if perm[s - 1] != s)
    return HalfTwistFactor(conjugator, core, sign, moved, m)


def factor_ok(f: HalfTwistFactor) -> bool:
    """Transposition avoiding the last strand, with zero total linking against it."""
    b = f.braid()
    m = b.strands
    if len(f.support) != 2 or f.avoid in f.support or permutation(b)[m - 1] != m:
        return False
    cc = crossing_counts(b)
    return sum(cc.get(frozenset((s, m)), 0) for s in range(1, m)) == 0


def _band_factor(i: int, j: int, strands: int, outer: BraidWord, inverse: bool) -> HalfTwistFactor:
    """outer . oriented_band(i, j)^{+-1} . outer^{-1} as a factor."""
    lo, hi = min(i, j), max(i, j)
    head = BraidWord(strands, tuple(range(hi - 1, lo, -1)))
    sign = 1 if i > j else -1
    return half_twist(outer * head, lo, -sign if inverse else sign)


def _runs(word: Sequence[int]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for y in free_reduce(word):
        q, e = abs(y), (1 if y > 0 else -1)
        if out and out[-1][0] == q:
            out[-1] = (q, out[-1][1] + e)
        else:
            out.append((q, e))
    return [r for r in out if r[1]]


def claimB_factor(word: Sequence[int], strands: int) -> list[HalfTwistFactor]:
    """Half twists avoiding the last strand whose product is the A-word.

    ``word`` uses signed q for A_{q,m}^{+-1}, m = strands.  The word is
    telescoped into pairs A_i^K A_j^{-K}, and each pair becomes two half twists
    through ``commutator_identity``.
    """
    m = strands
    runs = _runs(word)
    if sum(e for _, e in runs) != 0:
        raise BraidError("total linking number must be zero (the linking number of rho is trivial)")
    for q, _ in runs:
        if not 1 <= q <= m - 1:
            raise BraidError(f"letter A_{{{q},{m}}} out of range")
    factors: list[HalfTwistFactor] = []
    total = 0
    for (i, e), (j, _) in zip(runs, runs[1:]):
        total += e
        if total == 0:
            continue
        t = sigma_band(j, m, m) ** (2 * total)
        factors.append(_band_factor(i, j, m, identity(m), inverse=False))
        factors.append(_band_factor(i, j, m, t, inverse=True))
    return factors


def factors_product(factors: Iterable[HalfTwistFactor], strands: int) -> BraidWord:
    return product((f.braid() for f in factors), strands)


def factor_free_half_twists(b: BraidWord) -> tuple[list[HalfTwistFactor], int]:
    """Half twists avoiding the last strand, and the twist exponent t, with
    product(factors) = b . A_{m-1,m}^t.

    The twist around the last two strands cancels the linking with the last
    strand; the part on the first m-1 strands is kept letter by letter and the
    rest is factored by ``claimB_factor``.
    """
    _require_pure(b)
    m = b.strands
    t = -epsilon_total(b)
    corrected = b * a_gen(m, m - 1, m) ** t
    head, tail = split_last_strand(corrected)
    factors = [half_twist(identity(m), abs(x), 1 if x > 0 else -1) for x in head]
    factors.extend(claimB_factor(tail, m))
    return factors, t

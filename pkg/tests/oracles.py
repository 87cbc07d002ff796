"""Brute-force reference implementations used to cross-check the package.

Nothing here imports the code under test except for plain data types.
"""

import itertools
from math import gcd


# -- diagrams --------------------------------------------------------------------

def _canon(word):
    """Least (rotation, relabel-by-first-appearance) form of a word of (orbit, sign)."""
    best = None
    n = len(word)
    for k in range(n):
        rot = word[k:] + word[:k]
        lab = {}
        out = tuple((lab.setdefault(o, len(lab) + 1), s) for o, s in rot)
        if best is None or out < best:
            best = out
    return best


def _blocks(word):
    n = len(word)
    if len({s for _, s in word}) == 1:
        return [list(word)], 0
    k = next(i for i in range(n) if word[i][1] != word[i - 1][1])
    word = word[k:] + word[:k]
    out = []
    for t in word:
        if out and out[-1][0][1] == t[1]:
            out[-1].append(t)
        else:
            out.append([t])
    return out, k


def brute_classes(r):
    """Diagram classes with r orbits: all words modulo rotation, relabelling and
    permutation inside runs of equal sign.  Signs are 0 (minus) and 1 (plus)."""
    toks = [(i, s) for i in range(1, r + 1) for s in (0, 1)]
    seen = set()
    classes = set()
    for p in itertools.permutations(toks[1:]):
        w = _canon(((1, 0),) + p)
        if w in seen:
            continue
        bl, _ = _blocks(w)
        orbit_words = set()
        for perms in itertools.product(*[itertools.permutations(b) for b in bl]):
            orbit_words.add(_canon(tuple(t for b in perms for t in b)))
        seen |= orbit_words
        classes.add(min(orbit_words))
    return classes


def interleaving_pairs(word):
    pos = {t: i for i, t in enumerate(word)}
    r = len(word) // 2
    out = set()
    for i, j in itertools.combinations(range(1, r + 1), 2):
        a, b = sorted((pos[(i, 0)], pos[(i, 1)]))
        if (a < pos[(j, 0)] < b) != (a < pos[(j, 1)] < b):
            out.add((i, j))
    return out


def face_count(r, n_crossings):
    """Interior faces of a disk cut by r chords meeting in n_crossings simple points
    (Euler: V - E + F = 1 for the disk)."""
    v = 2 * r + n_crossings
    e = 2 * r + r + 2 * n_crossings
    return e - v + 1


# -- braids: Artin action on the free group --------------------------------------

def _reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def artin_action(m, word):
    """Images of the free generators x_1..x_m under the braid, a faithful invariant."""
    img = {i: (i,) for i in range(1, m + 1)}

    def sub(w, s):
        out = []
        for x in w:
            out += s[x] if x > 0 else [-y for y in reversed(s[-x])]
        return _reduce(out)

    for x in word:
        k = abs(x)
        s = {i: (i,) for i in range(1, m + 1)}
        if x > 0:
            s[k], s[k + 1] = (k, k + 1, -k), (k,)
        else:
            s[k], s[k + 1] = (k + 1,), (-(k + 1), k, k + 1)
        img = {i: sub(img[i], s) for i in img}
    return tuple(img[i] for i in range(1, m + 1))


def pair_linking(m, word):
    """Signed crossings per unordered strand pair, tracking strands by hand."""
    at = list(range(1, m + 1))
    out = {}
    for x in word:
        k = abs(x)
        key = tuple(sorted((at[k - 1], at[k])))
        out[key] = out.get(key, 0) + (1 if x > 0 else -1)
        at[k - 1], at[k] = at[k], at[k - 1]
    return out, tuple(at)


# -- curves: matrix action on slopes ---------------------------------------------

def slope_act(letters, xy):
    """Act on a direction vector (x, y); letters are (name, exp), rightmost first."""
    x, y = xy
    for name, k in reversed(letters):
        for _ in range(abs(k)):
            if name == "S":
                y = y + x if k > 0 else y - x
            elif name == "T":
                x = x + 2 * y if k > 0 else x - 2 * y
    return x, y


def coords_of_direction(x, y):
    assert gcd(x, y) == 1
    return (abs(y), abs(y), abs(x), abs(x), abs(x - y), abs(x - y))


def t_orbit_key(x, y):
    """Canonical T-orbit member of a direction: T moves x by multiples of 2y."""
    if y < 0 or (y == 0 and x < 0):
        x, y = -x, -y
    if y == 0:
        return (1, 0)
    x = x % (2 * y)
    if x > y:
        x -= 2 * y
    return (x, y)

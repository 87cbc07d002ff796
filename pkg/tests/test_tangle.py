from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from brouwer.tangle import (
    CROSSING,
    GAMMA_STD,
    NON_CROSSING,
    NOT_APPLICABLE,
    Curve,
    MCGWord,
    TangleError,
    act,
    adaptedness,
    curve_from_slope,
    format_word,
    normalize,
    parse_tangle,
    parse_word,
    slope,
    tangle_equal,
    tangle_of,
)

from oracles import coords_of_direction, slope_act, t_orbit_key

letters = st.tuples(st.sampled_from(["S", "T", "Tt", "Tb"]), st.sampled_from([1, -1, 2, -2, 3]))
mcg_words = st.lists(letters, max_size=6).map(lambda xs: MCGWord(tuple(xs)))
st_words = st.lists(st.tuples(st.sampled_from(["S", "T"]), st.sampled_from([1, -1, 2])), max_size=6).map(
    lambda xs: MCGWord(tuple(xs))
)


@st.composite
def directions(draw):
    x = draw(st.integers(-7, 7))
    y = draw(st.integers(-7, 7))
    assume(gcd(x, y) == 1)
    return x, y


def test_parse_word():
    w = parse_word("S^2 T^-1 Tt")
    assert w.letters == (("S", 2), ("T", -1), ("Tt", 1))
    assert format_word(w) == "S^2 T^-1 Tt"
    assert parse_word("") == MCGWord()
    with pytest.raises(TangleError):
        parse_word("X^2")


def test_curve_validation():
    with pytest.raises(TangleError):
        Curve((1, 2, 0, 0, 1, 1))
    with pytest.raises(TangleError):
        Curve((2, 2, 2, 2, 4, 4))  # two parallel copies


def test_gamma_std_slope():
    assert slope(GAMMA_STD) == (0, 1, "tp|bq")


def test_act_s2_on_core():
    # frozen by the slope oracle: S^2 sends direction (1, 0) to (1, 2)
    assert slope_act((("S", 2),), (1, 0)) == (1, 2)
    assert act(parse_word("S^2"), GAMMA_STD).coords == coords_of_direction(1, 2) == (2, 2, 1, 1, 1, 1)


@settings(max_examples=500, deadline=None)
@given(mcg_words, directions())
def test_act_matches_slope_oracle(w, xy):
    x, y = xy
    got = act(w, Curve(coords_of_direction(x, y)))
    assert got.coords == coords_of_direction(*slope_act(w.letters, xy))


@settings(max_examples=300, deadline=None)
@given(mcg_words, mcg_words, directions())
def test_act_is_an_action(u, v, xy):
    c = Curve(coords_of_direction(*xy))
    assert act(u * v, c) == act(u, act(v, c))
    assert act(u.inverse(), act(u, c)) == c


@settings(max_examples=300, deadline=None)
@given(mcg_words)
def test_images_separate_marked_points(w):
    # the image of the core still puts p and q on different sides
    assert slope(act(w, GAMMA_STD))[2] in ("tp|bq", "tq|bp")


@settings(max_examples=300, deadline=None)
@given(mcg_words, st.integers(-5, 5))
def test_tangle_t_invariant(w, n):
    assert tangle_of(parse_word(f"T^{n}") * w if n else w) == tangle_of(w)


@settings(max_examples=300, deadline=None)
@given(st_words, st_words)
def test_tangle_equal_matches_oracle(u, v):
    ku = t_orbit_key(*slope_act(u.letters, (1, 0)))
    kv = t_orbit_key(*slope_act(v.letters, (1, 0)))
    assert tangle_equal(tangle_of(u), tangle_of(v)) == (ku == kv)


def test_tangle_examples():
    assert tangle_of(MCGWord()).trivial
    assert tangle_of(parse_word("T^3")) == tangle_of(MCGWord())
    assert tangle_of(parse_word("S^2")).notation() == "tangle=2/1@tp|bq"
    assert tangle_of(parse_word("S^4")).notation() == "tangle=4/1@tp|bq"
    assert tangle_of(parse_word("S^-2")).notation() == "tangle=-2/1@tp|bq"
    assert not tangle_equal(tangle_of(parse_word("S^2")), tangle_of(parse_word("S^4")))
    assert not tangle_equal(tangle_of(parse_word("S^2")), tangle_of(parse_word("S^-2")))
    t = tangle_of(parse_word("S^2"))
    assert tangle_equal(t, normalize(act(parse_word("T"), t.representative)))
    assert not tangle_equal(tangle_of(MCGWord()), t)


def test_adaptedness_examples():
    assert adaptedness(tangle_of(parse_word("S^2"))) == NON_CROSSING
    assert adaptedness(tangle_of(parse_word("S"))) == CROSSING
    assert adaptedness(tangle_of(parse_word("S^3 T S"))) == NON_CROSSING
    assert adaptedness(tangle_of(MCGWord())) == NOT_APPLICABLE


def test_parse_tangle_round_trip():
    for word in ["", "S", "S^2", "S^3 T^-1 S", "S T S^-2"]:
        t = tangle_of(parse_word(word))
        assert parse_tangle(t.notation()) == t
    with pytest.raises(TangleError):
        parse_tangle("tangle=1/2@tp|bq")  # wrong partition for that slope
    with pytest.raises(TangleError):
        parse_tangle("tangle=2/4@tp|bq")


def test_trivial_tangle_iff_word_fixes_core():
    for word in ["T^2", "Tt Tb", "S^2 S^-2", "S T S^-1"]:
        w = parse_word(word)
        assert tangle_of(w).trivial == (normalize(act(w, GAMMA_STD)) == normalize(GAMMA_STD))


def test_slopes():
    for p, q in [(0, 1), (1, 1), (1, 0), (-3, 2), (5, 3)]:
        assert slope(curve_from_slope(p, q))[:2] == (p, q)

import pytest
from hypothesis import given, settings, strategies as st

from brouwer.braid import (
    BraidError,
    BraidWord,
    a_gen,
    a_letter,
    braid_equal,
    claimB_factor,
    comb,
    commutator_identity,
    conjugation_identity,
    crossing_counts,
    epsilon_i,
    epsilon_total,
    epsilon_vector,
    factor_free_half_twists,
    factor_ok,
    factors_product,
    format_braid,
    identity,
    is_pure,
    linking,
    normal_form,
    parse_braid,
    permutation,
    product,
    sigma_band,
)

from oracles import artin_action, pair_linking


def B(m, *w):
    return BraidWord(m, tuple(w))


@st.composite
def words(draw, min_m=2, max_m=5, max_len=12):
    m = draw(st.integers(min_m, max_m))
    w = draw(st.lists(st.integers(1, m - 1).flatmap(lambda k: st.sampled_from([k, -k])), max_size=max_len))
    return BraidWord(m, tuple(w))


@st.composite
def pure_words(draw, min_m=2, max_m=5, max_len=12):
    # a random word followed by the positive permutation braid of its inverse
    b = draw(words(min_m, max_m, max_len))
    perm = permutation(b)
    fix = []
    at = [0] * b.strands
    for s, p in enumerate(perm, start=1):
        at[p - 1] = s
    # bubble the strands home with positive crossings
    at = list(at)
    for i in range(len(at)):
        for j in range(len(at) - 1 - i):
            if at[j] > at[j + 1]:
                at[j], at[j + 1] = at[j + 1], at[j]
                fix.append(j + 1)
    out = BraidWord(b.strands, b.word + tuple(fix))
    assert is_pure(out)
    return out


def test_parse_format():
    b = parse_braid("n=3: [1,2,-1]")
    assert b == B(3, 1, 2, -1) and format_braid(b) == "n=3: [1,2,-1]"
    assert parse_braid("n=4: []") == identity(4)
    for bad in ["n=3: [3]", "n=3 [1]", "n=3: [1,x]", "n=3: [0]"]:
        with pytest.raises(BraidError):
            parse_braid(bad)


def test_normal_form_examples():
    assert braid_equal(B(3, 1, 2, 1), B(3, 2, 1, 2))
    assert not braid_equal(B(3, 1), B(3, -1))
    assert braid_equal(B(3, 1, -1), identity(3))
    assert str(normal_form(B(3, 1, -1))) == "Delta^0"


@settings(max_examples=300, deadline=None)
@given(words())
def test_normal_form_preserves_artin_action(b):
    assert artin_action(b.strands, normal_form(b).word().word) == artin_action(b.strands, b.word)


@settings(max_examples=300, deadline=None)
@given(words(3, 4, 6), st.data())
def test_braid_equal_matches_artin_action(b, data):
    c = data.draw(words(b.strands, b.strands, 6))
    assert braid_equal(b, c) == (artin_action(b.strands, b.word) == artin_action(c.strands, c.word))


@settings(max_examples=100, deadline=None)
@given(words(3, 4, 6), st.data())
def test_braid_equal_is_a_congruence(b, data):
    c = data.draw(words(b.strands, b.strands, 6))
    e = data.draw(words(b.strands, b.strands, 6))
    relator = B(b.strands, 1, 2, 1, -2, -1, -2) if b.strands >= 3 else identity(b.strands)
    b2 = b * relator
    assert braid_equal(b, b2) and braid_equal(b2, b)
    assert braid_equal(e * b * c, e * b2 * c)


def test_a_gen_examples():
    assert a_gen(2, 1, 3) == B(3, 1, 1)
    assert a_gen(3, 1, 3) == B(3, 2, 1, 1, -2)
    with pytest.raises(BraidError):
        a_gen(1, 2, 3)


def test_sigma_band_adjacent():
    for m in range(2, 6):
        for i in range(1, m):
            assert sigma_band(i, i + 1, m) == B(m, i)


@settings(max_examples=200, deadline=None)
@given(pure_words())
def test_linking_matches_oracle(b):
    counts, at = pair_linking(b.strands, b.word)
    assert at == tuple(range(1, b.strands + 1))
    m = b.strands
    assert epsilon_vector(b) == [counts.get((i, m), 0) // 2 for i in range(1, m)]
    for (i, j), c in counts.items():
        assert linking(b, i, j) == c // 2


def test_epsilon_of_generators():
    for m in range(2, 6):
        for k in range(1, m):
            a = a_letter(k, m, m)
            assert epsilon_total(a) == 1 and epsilon_i(a, k) == 1
            assert [x for i, x in enumerate(epsilon_vector(a), 1) if i != k] == [0] * (m - 2)


def test_epsilon_needs_pure():
    with pytest.raises(BraidError):
        epsilon_vector(B(3, 1))


@settings(max_examples=200, deadline=None)
@given(pure_words(3, 5), st.data())
def test_epsilon_is_a_morphism(b, data):
    c = data.draw(pure_words(b.strands, b.strands))
    assert epsilon_total(b * c) == epsilon_total(b) + epsilon_total(c)


@settings(max_examples=100, deadline=None)
@given(pure_words(3, 5), st.data())
def test_epsilon_invariant_under_conjugation_away_from_last_strand(b, data):
    m = b.strands
    # a braid on strands 1..m-1, so it fixes the last strand and avoids it
    letters = data.draw(st.lists(st.integers(1, m - 2).flatmap(lambda k: st.sampled_from([k, -k])), max_size=6))
    s = BraidWord(m, tuple(letters))
    assert epsilon_total(s * b * s.inverse()) == epsilon_total(b)


def test_comb_examples():
    assert comb(identity(4)).text() == "b2=1; b3=1; b4=1"
    c = comb(a_gen(3, 2, 3))
    assert braid_equal(c.product(), a_gen(3, 2, 3))
    assert c.text() == "b2=1; b3=A2,3"


@settings(max_examples=200, deadline=None)
@given(pure_words(2, 5))
def test_comb_round_trip(b):
    c = comb(b)
    assert braid_equal(c.product(), b)
    for k, layer in c.betas.items():
        assert all(1 <= abs(y) < k for y in layer)


def test_comb_rejects_impure():
    with pytest.raises(BraidError):
        comb(B(3, 1))


def test_conjugation_identity_holds_only_at_zero():
    for m in range(3, 6):
        for i in range(1, m):
            for j in range(1, m):
                if i == j:
                    continue
                lhs, rhs = conjugation_identity(i, j, 0, m)
                assert braid_equal(lhs, rhs) and braid_equal(lhs, identity(m))
                for k in (1, 2, -1):
                    lhs, rhs = conjugation_identity(i, j, k, m)
                    assert not braid_equal(lhs, rhs)
                    # the two sides differ already in linking with the last strand
                    assert epsilon_vector(lhs) != epsilon_vector(rhs)


def test_commutator_identity():
    for m in range(3, 6):
        for i in range(1, m):
            for j in range(1, m):
                if i != j:
                    for k in range(-3, 4):
                        assert braid_equal(*commutator_identity(i, j, k, m))


def test_band_factorization_examples():
    assert claimB_factor([], 4) == []
    fs = claimB_factor([1, -2], 4)
    assert len(fs) == 2
    target = a_letter(1, 4, 4) * a_letter(2, 4, 4, -1)
    assert braid_equal(factors_product(fs, 4), target)
    with pytest.raises(BraidError, match="linking number of rho is trivial"):
        claimB_factor([1, 2], 4)


@st.composite
def balanced_a_words(draw):
    m = draw(st.integers(3, 5))
    w = draw(st.lists(st.integers(1, m - 1).flatmap(lambda q: st.sampled_from([q, -q])), max_size=8))
    s = sum(1 if y > 0 else -1 for y in w)
    tail = draw(st.lists(st.integers(1, m - 1), min_size=abs(s), max_size=abs(s)))
    return m, w + [(-1 if s > 0 else 1) * q for q in tail]


@settings(max_examples=100, deadline=None)
@given(balanced_a_words())
def test_band_factorization_round_trip(mw):
    m, w = mw
    fs = claimB_factor(w, m)
    target = product((a_letter(abs(y), m, m, 1 if y > 0 else -1) for y in w), m)
    assert braid_equal(factors_product(fs, m), target)
    assert all(factor_ok(f) and m not in f.support for f in fs)


def test_factor_free_examples():
    assert factor_free_half_twists(identity(3)) == ([], 0)
    fs, t = factor_free_half_twists(B(4, 1, 1, -2, -2))
    assert t == 0 and [(f.core, f.sign) for f in fs] == [(1, 1), (1, 1), (2, -1), (2, -1)]


@settings(max_examples=50, deadline=None)
@given(pure_words(3, 4))
def test_factor_free_round_trip(b):
    fs, t = factor_free_half_twists(b)
    m = b.strands
    assert t == -epsilon_total(b)
    assert braid_equal(factors_product(fs, m), b * a_gen(m, m - 1, m) ** t)
    assert all(factor_ok(f) for f in fs)


@settings(max_examples=50, deadline=None)
@given(pure_words(3, 4))
def test_factor_support_is_a_transposition(b):
    for f in factor_free_half_twists(b)[0]:
        perm = permutation(f.braid())
        moved = [s for s in range(1, b.strands + 1) if perm[s - 1] != s]
        assert len(moved) == 2 and b.strands not in moved
        cc = crossing_counts(f.braid())
        assert sum(cc.get(frozenset((s, b.strands)), 0) for s in range(1, b.strands)) == 0

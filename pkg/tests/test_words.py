import random

import pytest
from hypothesis import given, strategies as st

from platslide.colored_graph import random_admissible
from platslide.curves import LandmarkError
from platslide.words import (
    ConditionError,
    InadmissibleError,
    Letter,
    PairContext,
    Word,
    WordError,
    alpha_pq,
    apply_move,
    bridge_word,
    chi_words,
    compute,
    elementary_word,
    free_reduce,
    plat_sum,
    psl,
    psl_star,
    sigma,
    twist_substitution,
    untwist_substitution,
)
from platslide.tuple_core import SixTuple

from helpers import INADMISSIBLE

GENS = ["al", "ar", "bl", "br"]
letters = st.builds(Letter, st.sampled_from(GENS), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=30).map(lambda xs: Word(tuple(xs)))


def W(text, **kw):
    return Word.parse(text, **kw)


def random_schedule_reduce(w, rng):
    """Cancel a randomly chosen adjacent inverse pair until none is left."""
    xs = list(w.letters)
    while True:
        spots = [i for i in range(len(xs) - 1) if xs[i] == xs[i + 1].inverse()]
        if not spots:
            return Word(tuple(xs), w.genus, w.strands)
        i = rng.choice(spots)
        del xs[i:i + 2]


def test_letter_parse_and_print():
    for tok in ["al", "ar^-1", "s12", "b3^-1", "a1"]:
        assert str(Letter.parse(tok)) == tok
    assert Letter.parse("br^1") == Letter("br", 1)
    for bad in ["cl", "s0", "al^2", "a", "al^-2"]:
        with pytest.raises(WordError):
            Letter.parse(bad)


def test_word_validate_bounds():
    W("s1 al b2", strands=2).validate()
    with pytest.raises(WordError):
        W("s2", strands=2).validate()
    with pytest.raises(WordError):
        W("a3", genus=2).validate()


def test_free_reduce_examples():
    assert free_reduce(W("ar br^-1 br al^-1")) == W("ar al^-1")
    assert free_reduce(Word()) == Word()


@given(words)
def test_word_times_inverse_reduces_to_empty(w):
    assert len(free_reduce(w + w.inverse())) == 0


@given(words)
def test_free_reduce_idempotent(w):
    once = free_reduce(w)
    assert free_reduce(once) == once


@given(words, st.integers(0, 2**32 - 1))
def test_free_reduce_order_independent(w, seed):
    assert random_schedule_reduce(w, random.Random(seed)) == free_reduce(w)


def test_bridge_word():
    assert str(bridge_word(2, 2)) == "s4 s5 s3 s4"
    assert len(bridge_word(1, 5)) == 0
    for n in range(1, 7):
        for m in range(1, 7):
            assert len(bridge_word(n, m)) == (2 * n - 2) * (2 * m - 2)


@given(words, words)
def test_plat_sum_with_two_strands_concatenates(a, b):
    assert plat_sum(a, b).letters == a.letters + b.letters


def test_plat_sum_inserts_bridge():
    a = W("s1", strands=4)
    b = W("s2", strands=4)
    assert str(plat_sum(a, b)) == "s1 s4 s5 s3 s4 s2"
    assert plat_sum(a, b).strands == 6


def test_twist_generator_images():
    k = 2
    assert twist_substitution(k, W("al")) == W("al", strands=4)
    assert twist_substitution(k, W("b2")) == W("b2", strands=4)
    assert str(twist_substitution(k, W("s3"))) == "s3"
    assert str(twist_substitution(k, W("s4"))) == "s4 s5 s6 s5^-1 s4^-1"
    assert str(twist_substitution(k, W("s4^-1"))) == "s4 s5 s6^-1 s5^-1 s4^-1"
    assert str(twist_substitution(k, W("s5"))) == "s7"


@given(st.lists(st.tuples(st.integers(1, 7), st.sampled_from([1, -1])), max_size=12), st.integers(1, 3))
def test_m6_round_trip(pairs, k):
    beta = Word(tuple(sigma(i, e) for i, e in pairs), strands=8)
    moved = apply_move("M6", beta, index=k)
    assert moved.letters[-1] == sigma(2 * k)
    assert untwist_substitution(k, Word(moved.letters[:-1], strands=moved.strands)).letters == beta.letters


def test_moves_one_to_five():
    beta = W("al", strands=4)
    assert str(apply_move("M1", beta)) == "s1 al"
    assert str(apply_move("M1", beta, side="right")) == "al s1"
    assert str(apply_move("M2", beta, index=1)) == "s2 s3 s1 s2 al"
    assert str(apply_move("M3", beta)) == "s2 s1 s1 s2 al"
    assert str(apply_move("M4", beta, index=2)) == "a2 s1^-1 a2 s1^-1 al"
    assert str(apply_move("M5", beta, side="right", index=1)) == "al b1 s1^-1 b1 s1^-1"
    with pytest.raises(WordError):
        apply_move("M4", beta, index=3)
    with pytest.raises(WordError):
        apply_move("M2", beta, index=2)
    with pytest.raises(WordError):
        apply_move("M7", beta)


def test_psl_star():
    assert str(psl_star(1, Word())) == "b1"
    assert str(psl_star(2, psl_star(2, W("al")))) == "al b2 b2"
    with pytest.raises(WordError):
        psl_star(3, Word())


def test_alpha_pq_examples():
    assert str(alpha_pq(0, 1)) == "b1^-1"
    assert str(alpha_pq(3, 3)) == "b1^-1 a1 b1^-1 a1 b1^-1 a1"
    assert str(alpha_pq(3, 2)) == "b1^-1 a1 a1 b1^-1 a1"
    with pytest.raises(WordError):
        alpha_pq(1, 0)


@given(st.integers(-40, 40), st.integers(1, 20))
def test_alpha_pq_exponent_sums(p, q):
    w = alpha_pq(p, q)
    assert w.exponent_sum("a") == p
    assert w.exponent_sum("b") == -q


def test_elementary_words():
    assert str(elementary_word(PairContext("up-left", "l", 0))) == "al"
    assert str(elementary_word(PairContext("up-left", "l", 1))) == "al bl"
    assert str(elementary_word(PairContext("up-left", "l", -1))) == "al bl^-1"
    assert str(elementary_word(PairContext("back-up", "r", -1))) == "br^-1 ar^-1 br^-1"
    with pytest.raises(WordError):
        elementary_word(PairContext("z", "l", 0))


def test_smallest_census_words():
    got = sorted(str(w) for w in chi_words(SixTuple(3, 3, 3, 2, 2, 2)))
    assert got == sorted(
        [
            "ar^-1 br al^-1 bl^-1 al^-1 ar^-1",
            "al bl br^-1 ar^-1 br al^-1 ar^-1",
            "al bl ar br^-1 al bl br^-1 ar^-1 br",
        ]
    )


@given(st.integers(0, 2**32 - 1))
def test_letter_blocks_follow_red_arcs(seed):
    f = random_admissible(random.Random(seed), 12)
    try:
        result = compute(f)
    except LandmarkError:
        return
    assert sum(len(c.reds) for c in result.curves) == 2 * f.h0 + f.h1 + f.h2
    for w in result.words:
        assert not any(x.kind == "s" for x in w)


def test_words_are_not_reduced():
    joined = " ".join(str(w) for w in chi_words(SixTuple(4, 4, 4, 3, 3, 3)))
    assert "br^-1 br" in joined


def test_psl_concatenates():
    chi = chi_words(SixTuple(3, 3, 3, 2, 2, 2))
    assert psl(SixTuple(3, 3, 3, 2, 2, 2), 1) == chi[1]
    assert str(psl(SixTuple(3, 3, 3, 2, 2, 2), 1, W("bl"))) == str(chi[1]) + " bl"
    with pytest.raises(WordError):
        psl(SixTuple(3, 3, 3, 2, 2, 2), 3)


def test_bad_codes_raise():
    with pytest.raises(ConditionError) as info:
        chi_words(SixTuple(3, 4, 3, 2, 2, 2))
    assert info.value.violated == [1, 4]
    with pytest.raises(InadmissibleError):
        chi_words(INADMISSIBLE)

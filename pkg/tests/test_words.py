from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twobridge.words import (
    NonHyperbolicError,
    TwoBridgeWord,
    WordError,
    canonical_form,
    component_count,
    continued_fraction,
    is_arithmetic,
    is_hyperbolic,
    is_palindromic,
    normalize,
    parse_word,
    slope_sequence,
)

from oracles import continuant_fraction, plat_component_count

syllable_vectors = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(tuple)
hyperbolic_vectors = st.lists(st.integers(1, 6), min_size=2, max_size=6).map(tuple)


def test_parse_exponent_form():
    w = parse_word("R2L3R2L")
    assert w.syllables == (2, 3, 2, 1)
    assert w.first_letter == "R"


def test_parse_expanded_form_merges_runs():
    assert parse_word("RRLLLRRL") == parse_word("R2L3R2L")


def test_parse_errors_name_positions():
    with pytest.raises(WordError) as err:
        parse_word("R0L")
    assert err.value.position == 2
    with pytest.raises(WordError) as err:
        parse_word("RxL")
    assert err.value.position == 2
    with pytest.raises(WordError) as err:
        parse_word("")
    assert err.value.position == 1
    with pytest.raises(WordError):
        parse_word("2RL")


def test_letters_and_prefix_sums():
    w = parse_word("R2L3R2L")
    assert w.letters == "RRLLLRRL"
    assert w.c == 8 and w.n == 4
    assert w.prefix_sums == (0, 2, 5, 7, 8)


def test_str_compact_exponent_form():
    assert str(parse_word("RRLLLRRL")) == "R2L3R2L"
    assert str(parse_word("rl")) == "RL"


@given(syllable_vectors)
def test_parse_print_round_trip(alpha):
    w = TwoBridgeWord(alpha, "R")
    assert parse_word(str(w)) == w
    assert parse_word(w.letters) == w


def test_normalize():
    assert normalize(parse_word("LRL")) == (parse_word("RLR"), True)
    assert normalize(parse_word("RL")) == (parse_word("RL"), False)
    assert normalize(parse_word("L3R2")) == (parse_word("R3L2"), True)


def test_is_hyperbolic():
    assert not is_hyperbolic(parse_word("R5"))
    assert is_hyperbolic(parse_word("RL"))
    assert is_hyperbolic(parse_word("R2L3R2L"))


def test_canonical_form_examples():
    assert canonical_form(TwoBridgeWord((2, 3, 2, 1))).syllables == (1, 2, 3, 2)
    assert canonical_form(TwoBridgeWord((3, 2))).syllables == (2, 3)
    assert canonical_form(TwoBridgeWord((3, 2, 1, 2, 3))).syllables == (3, 2, 1, 2, 3)


@given(syllable_vectors)
def test_canonical_form_idempotent_and_symmetric(alpha):
    w = TwoBridgeWord(alpha, "R")
    canon = canonical_form(w)
    assert canonical_form(canon) == canon
    assert canonical_form(TwoBridgeWord(alpha[::-1], "R")) == canon
    assert canonical_form(TwoBridgeWord(alpha, "L")) == canon


def test_is_palindromic():
    assert is_palindromic(TwoBridgeWord((3, 2, 1, 2, 3)))
    assert not is_palindromic(TwoBridgeWord((2, 3, 2, 1)))
    assert is_palindromic(TwoBridgeWord((3, 3)))


def test_palindromic_last_letter_parity():
    # letters alternate from R: odd n ends in R, even n ends in L
    for alpha in [(3, 2, 1, 2, 3), (1, 2, 1), (3, 3), (1, 2, 2, 1)]:
        w = TwoBridgeWord(alpha)
        assert is_palindromic(w)
        assert w.letters[-1] == ("R" if w.n % 2 == 1 else "L")


def test_is_arithmetic():
    assert is_arithmetic(parse_word("RL"))
    assert is_arithmetic(parse_word("RL2R"))
    assert is_arithmetic(parse_word("LRL"))
    assert is_arithmetic(parse_word("L2R2"))
    assert not is_arithmetic(parse_word("R2L3R2L"))
    with pytest.raises(NonHyperbolicError):
        is_arithmetic(parse_word("R3"))


def test_continued_fraction_frozen_values():
    assert continued_fraction(parse_word("RL")) == ([2, 2], Fraction(5, 2))
    assert continued_fraction(parse_word("RLR")) == ([2, 1, 2], Fraction(8, 3))
    assert continued_fraction(parse_word("R2L2")) == ([3, 3], Fraction(10, 3))
    assert continued_fraction(parse_word("RL2R")) == ([2, 2, 2], Fraction(12, 5))


@given(hyperbolic_vectors)
def test_continued_fraction_matches_continuant_oracle(alpha):
    w = TwoBridgeWord(alpha, "R")
    digits, value = continued_fraction(w)
    assert value == continuant_fraction(digits)
    assert value.numerator > value.denominator >= 1


def test_component_count_examples():
    assert component_count(parse_word("RL")) == 1
    assert component_count(parse_word("RLR")) == 2
    # spec's example table says 1, but its own p-parity rule and the plat
    # oracle both give 2 components for this word (56/17)
    assert component_count(parse_word("R2L3R2L")) == 2


@given(hyperbolic_vectors)
def test_component_count_matches_plat_oracle(alpha):
    w = TwoBridgeWord(alpha, "R")
    assert component_count(w) == plat_component_count(alpha)


def test_slope_sequence_start_and_step():
    seq = slope_sequence(parse_word("R2L3R2L"))
    first = seq.triples[0]
    assert [str(s) for s in first] == ["0/1", "1/1", "1/0"]
    second = seq.triples[1]
    assert [str(s) for s in second] == ["0/1", "1/2", "1/1"]
    assert len(seq.triples) == parse_word("R2L3R2L").c + 1


def test_slope_sequence_tetrahedron_count():
    assert slope_sequence(parse_word("RL")).tetrahedron_count == 2
    assert slope_sequence(parse_word("R2L3R2L")).tetrahedron_count == 14


@given(hyperbolic_vectors)
def test_consecutive_slope_triples_share_two_slopes(alpha):
    seq = slope_sequence(TwoBridgeWord(alpha, "R"))
    for a, b in zip(seq.triples, seq.triples[1:]):
        assert len(set(a) & set(b)) == 2


@given(hyperbolic_vectors)
def test_slopes_stay_reduced(alpha):
    from math import gcd

    seq = slope_sequence(TwoBridgeWord(alpha, "R"))
    for triple in seq.triples:
        for s in triple:
            assert gcd(s.p, s.q) == 1

import random

import pytest
from hypothesis import given, strategies as st

from lkrep.braids import (
    BraidWord,
    Permutation,
    compose,
    exponent_sum,
    full_twist,
    include,
    invert,
    parse_braid,
    permutation_of,
    random_word,
)


def test_parse_basic():
    w = parse_braid("1 -2 1", 3)
    assert w.letters == ((1, 1), (2, -1), (1, 1))
    assert parse_braid("", 4).is_identity


@pytest.mark.parametrize(
    "text,strands,fragment",
    [
        ("3", 3, "index 3"),
        ("0", 3, "'0'"),
        ("x", 3, "'x'"),
        ("1 4", 4, "index 4"),
    ],
)
def test_parse_errors_name_the_token(text, strands, fragment):
    with pytest.raises(ValueError, match=".*"):
        parse_braid(text, strands)
    try:
        parse_braid(text, strands)
    except ValueError as exc:
        assert fragment in str(exc)


def test_exponent_sum_and_invert():
    assert exponent_sum(parse_braid("1 -2 1", 3)) == 1
    assert str(invert(parse_braid("1 2", 3))) == "-2 -1"


def test_compose_requires_same_strands():
    with pytest.raises(ValueError):
        compose(parse_braid("1", 2), parse_braid("1", 3))


def test_full_twist_words():
    assert str(full_twist(3, 2)) == "1 1"
    assert str(full_twist(4, 3)) == "1 2 1 2 1 2"
    delta2 = full_twist(4, 4)
    assert len(delta2) == 12
    assert exponent_sum(delta2) == 12
    with pytest.raises(ValueError):
        full_twist(3, 4)
    with pytest.raises(ValueError):
        full_twist(3, 1)


def test_include():
    w = parse_braid("1", 2)
    assert include(w, 4).strands == 4
    assert str(include(w, 4)) == "1"
    assert str(include(w, 4, offset=2)) == "3"
    assert exponent_sum(include(parse_braid("1 -1 1", 2), 5, 1)) == 1
    with pytest.raises(ValueError):
        include(parse_braid("1", 3), 3, 1)


def test_permutations():
    assert permutation_of(BraidWord(4)).is_identity
    assert permutation_of(parse_braid("1", 2)).images == (2, 1)
    # two adjacent transpositions compose to a 3-cycle
    assert permutation_of(parse_braid("1 2", 3)).images == (2, 3, 1)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))


words = st.builds(
    lambda strands, pairs: BraidWord(
        strands, tuple((1 + (i % (strands - 1)), s) for i, s in pairs)
    ),
    st.integers(2, 6),
    st.lists(st.tuples(st.integers(0, 97), st.sampled_from((1, -1))), max_size=12),
)


@given(words, words)
def test_exponent_sum_is_homomorphism(a, b):
    if a.strands != b.strands:
        b = BraidWord(a.strands, tuple((min(i, a.strands - 1), s) for i, s in b.letters))
    ab = compose(a, b)
    assert exponent_sum(ab) == exponent_sum(a) + exponent_sum(b)


@given(words)
def test_inverse_kills_exponent_and_permutation(a):
    c = compose(a, invert(a))
    assert exponent_sum(c) == 0
    assert permutation_of(c).is_identity


def test_random_word_reproducible():
    assert random_word(4, 6, random.Random(3)).letters == random_word(4, 6, random.Random(3)).letters

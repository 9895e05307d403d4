import random

import pytest
from hypothesis import given, settings, strategies as st

from fara.numerals import (
    LIMIT,
    NumeralError,
    NumeralPhrase,
    SIGN_VALUES,
    format_signs,
    int_to_words,
    parse_phrase,
    parse_signs,
    sign_decomposition,
    words_to_int,
)
from fara.translit import UnknownWordError

GOLDEN = {
    1: "aš", 2: "min", 3: "eš₅", 4: "limmu", 5: "iá", 9: "ilimmu",
    10: "u", 20: "niš", 30: "ùšu", 40: "nimin", 50: "ninnu",
    55: "ninnu-iá", 60: "géš", 70: "gešta-u", 600: "géš-u",
    3600: "šár", 216000: "šár-gal", 9660: "šár-min géš-u-limmu géš",
}


@pytest.mark.parametrize("n, text", GOLDEN.items())
def test_golden_words(n, text):
    assert str(int_to_words(n)) == text
    assert words_to_int(text) == n


def test_exhaustive_roundtrip_to_3600():
    for n in range(1, 3601):
        assert words_to_int(int_to_words(n)) == n


def test_random_roundtrip_below_60_to_the_4th():
    rng = random.Random(4)
    for _ in range(10_000):
        n = rng.randrange(1, LIMIT)
        assert words_to_int(str(int_to_words(n))) == n


@pytest.mark.parametrize(
    "spelling, n",
    [
        ("szar2-min gesz2-u-limmu gesz2", 9660),
        ("shar2-min gesh2-u-limmu gesh2", 9660),
        ("šar-min geš-u-limmu geš", 9660),
        ("ŠÁR-GAL", 216000),
        ("esh5", 3),
        ("diš", 1),
        ("ash", 1),
        ("geshta-u", 70),
        ("géš iá", 65),
        ("géš-iá", 300),
    ],
)
def test_spelling_variants(spelling, n):
    assert words_to_int(spelling) == n


@pytest.mark.parametrize("bad", ["", "foo", "u aš", "géš géš", "aš-géš", "šár-gal-1,0", "iá iá"])
def test_malformed_phrases(bad):
    with pytest.raises((NumeralError, UnknownWordError)):
        words_to_int(bad)


@pytest.mark.parametrize("n", [0, -1, LIMIT])
def test_out_of_range(n):
    with pytest.raises(NumeralError):
        int_to_words(n)


def test_phrase_tokens():
    p = parse_phrase("šár-min géš-u-limmu géš")
    assert p.tokens == (("šár", 2), ("géš-u", 4), ("géš", 1))
    assert p == int_to_words(9660)
    with pytest.raises(NumeralError):
        NumeralPhrase((("géš", 1), ("šár", 1)))


@settings(max_examples=500, deadline=None)
@given(n=st.integers(min_value=1, max_value=LIMIT - 1), style=st.sampled_from(["round", "wedge"]))
def test_sign_tally_preserves_value(n, style):
    t = sign_decomposition(n, style)
    assert t.value == n
    assert sum(v * c for v, c in t.counts.items()) == n
    assert set(t.counts) <= set(SIGN_VALUES)
    assert all(1 <= c for c in t.counts.values())
    assert parse_signs(format_signs(t)) == t


def test_sign_tally_text():
    assert format_signs(sign_decomposition(9660, "wedge")) == "wedge: 2×ŠÁR 4×GÉŠ-U 1×GÉŠ"
    assert sign_decomposition(70).counts == {60: 1, 10: 1}

"""Sumerian numeral words and sign tallies for integers below 60**4.

Grammar used for phrases:

* a phrase is a space-separated sequence of terms with strictly descending
  value;
* a big-unit term is ``šár-gal``, ``šár``, ``géš-u`` or ``géš``, optionally
  followed by a hyphenated multiplier (``šár-min`` = 2 x 3600,
  ``géš-u-limmu`` = 4 x 600);
* the last term may be a number below 60: a tens word, a unit word, or
  tens-unit (``ninnu-iá`` = 55);
* ``gešta-u`` is the attested word for 70 and is only produced for 70.

Multipliers above 10 (``šár-nimin-aš``) extrapolate the single attested
multi-sign multiplier ``géš-u-limmu``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from fara.sexcore import SexagesimalError
from fara.translit import Lexicon, UnknownWordError, split_atoms

LIMIT = 60**4

UNITS = {
    "aš": 1,
    "min": 2,
    "eš₅": 3,
    "limmu": 4,
    "iá": 5,
    "àš": 6,
    "imin": 7,
    "ussu": 8,
    "ilimmu": 9,
}
TENS = {"u": 10, "niš": 20, "ùšu": 30, "nimin": 40, "ninnu": 50}
BIG = {"šár-gal": 60**3, "šár": 60**2, "géš-u": 600, "géš": 60}
GESHTA_U = 70

BASIC_WORDS = {**UNITS, **TENS, "géš": 60, "šár": 3600, "šár-gal": 216000}

_UNIT_NAME = {v: k for k, v in UNITS.items()}
_TENS_NAME = {v: k for k, v in TENS.items()}

_lexicon: Lexicon[tuple[str, int]] = Lexicon(
    [(w, ("unit", v)) for w, v in UNITS.items()]
    + [(w, ("tens", v)) for w, v in TENS.items()]
    + [(w, ("big", v)) for w, v in BIG.items()]
    + [("gešta-u", ("geshta", GESHTA_U))],
    kind="numeral word",
)
_lexicon.add("diš", ("unit", 1))


class NumeralError(SexagesimalError):
    pass


def _check_range(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise NumeralError(f"{n!r} is not an integer")
    if not 1 <= n < LIMIT:
        raise NumeralError(f"{n} outside 1..{LIMIT - 1}; zero had no numeral")


def small_words(n: int) -> list[str]:
    """Words for 1 <= n < 60: tens word then unit word."""
    if not 1 <= n < 60:
        raise NumeralError(f"{n} is not in 1..59")
    tens, units = divmod(n, 10)
    out = []
    if tens:
        out.append(_TENS_NAME[tens * 10])
    if units:
        out.append(_UNIT_NAME[units])
    return out


@dataclass(frozen=True)
class NumeralPhrase:
    """Parsed numeral: ``(word, multiplier)`` pairs in descending value.

    Sub-sixty words carry multiplier 1; ``tokens`` for 9660 are
    ``[('šár', 2), ('géš-u', 4), ('géš', 1)]``.
    """

    tokens: tuple[tuple[str, int], ...]
    _value: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        total = 0
        prev = None
        for word, mult in self.tokens:
            unit = word_value(word)
            if not 1 <= mult <= 59:
                raise NumeralError(f"multiplier {mult} of {word} outside 1..59")
            if word not in BIG and mult != 1:
                raise NumeralError(f"{word} takes no multiplier")
            if prev is not None and unit >= prev:
                raise NumeralError(f"{word} does not descend from the previous term")
            prev = unit
            total += unit * mult
        if not 1 <= total < LIMIT:
            raise NumeralError(f"phrase value {total} outside 1..{LIMIT - 1}")
        object.__setattr__(self, "_value", total)

    @property
    def value(self) -> int:
        return self._value

    @property
    def text(self) -> str:
        terms = []
        small = []
        for word, mult in self.tokens:
            if word in BIG:
                terms.append(word if mult == 1 else "-".join([word, *small_words(mult)]))
            else:
                small.append(word)
        if small:
            terms.append("-".join(small))
        return " ".join(terms)

    def __str__(self) -> str:
        return self.text


def word_value(word: str) -> int:
    if word in BIG:
        return BIG[word]
    if word == "gešta-u":
        return GESHTA_U
    if word in TENS:
        return TENS[word]
    if word in UNITS:
        return UNITS[word]
    if word == "diš":
        return 1
    raise NumeralError(f"unknown numeral word {word!r}")


def int_to_words(n: int) -> NumeralPhrase:
    """Greedy decomposition over šár-gal, šár, géš-u, géš, then tens and units."""
    _check_range(n)
    if n == GESHTA_U:
        return NumeralPhrase((("gešta-u", 1),))
    tokens = []
    rest = n
    for word, unit in BIG.items():
        count, rest = divmod(rest, unit)
        if count:
            tokens.append((word, count))
    if rest:
        tokens.extend((w, 1) for w in small_words(rest))
    return NumeralPhrase(tuple(tokens))


def _small_value(parts: list[tuple[str, tuple[str, int]]], term: str) -> tuple[list[str], int]:
    """Validate a tens-then-units run and return (canonical words, value)."""
    kinds = [kind for _, (kind, _) in parts]
    if kinds not in (["tens"], ["unit"], ["tens", "unit"]):
        raise NumeralError(f"malformed number below sixty in {term!r}")
    return [w for w, _ in parts], sum(v for _, (_, v) in parts)


def parse_phrase(text: str) -> NumeralPhrase:
    """Parse a phrase; matching ignores diacritics (``shar2-min`` = ``šár-min``)."""
    terms = text.split()
    if not terms:
        raise NumeralError("empty numeral phrase")
    tokens: list[tuple[str, int]] = []
    for i, term in enumerate(terms):
        atoms = split_atoms(term)
        try:
            parts = _lexicon.tokenize(atoms)
        except UnknownWordError as exc:
            raise NumeralError(str(exc)) from None
        head, (kind, _) = parts[0]
        if kind == "big":
            if len(parts) == 1:
                mult = 1
            else:
                _, mult = _small_value(parts[1:], term)
            tokens.append((head, mult))
        elif kind == "geshta":
            if len(parts) != 1:
                raise NumeralError(f"gešta-u takes no multiplier in {term!r}")
            tokens.append((head, 1))
        else:
            if i != len(terms) - 1:
                raise NumeralError(f"number below sixty {term!r} must come last")
            words, _ = _small_value(parts, term)
            tokens.extend((w, 1) for w in words)
    try:
        return NumeralPhrase(tuple(tokens))
    except NumeralError as exc:
        raise NumeralError(f"{exc} in {text!r}") from None


def words_to_int(p: NumeralPhrase | str) -> int:
    if isinstance(p, str):
        p = parse_phrase(p)
    return p.value


# -- signs ---------------------------------------------------------------

SIGN_VALUES = (216000, 3600, 600, 60, 10, 1)
SIGN_NAMES = {216000: "ŠÁR-GAL", 3600: "ŠÁR", 600: "GÉŠ-U", 60: "GÉŠ", 10: "U", 1: "DIŠ"}
STYLES = ("round", "wedge")


@dataclass(frozen=True)
class SignTally:
    """Counts of number signs.  Round-style signs reuse the wedge-style values;
    the round repertoire is provisional."""

    style: str
    counts: dict[int, int]

    def __post_init__(self):
        if self.style not in STYLES:
            raise NumeralError(f"unknown sign style {self.style!r}")
        for v, c in self.counts.items():
            if v not in SIGN_NAMES:
                raise NumeralError(f"no number sign of value {v}")
            if c < 0:
                raise NumeralError("sign counts are non-negative")

    @property
    def value(self) -> int:
        return sum(v * c for v, c in self.counts.items())


def sign_decomposition(n: int, style: str = "wedge") -> SignTally:
    _check_range(n)
    counts = {}
    rest = n
    for v in SIGN_VALUES:
        c, rest = divmod(rest, v)
        if c:
            counts[v] = c
    return SignTally(style, counts)


def format_signs(t: SignTally) -> str:
    parts = [f"{t.counts[v]}×{SIGN_NAMES[v]}" for v in SIGN_VALUES if t.counts.get(v)]
    if not parts:
        raise NumeralError("an empty tally denotes zero, which had no sign")
    return f"{t.style}: " + " ".join(parts)


_SIGN_ITEM = re.compile(r"(\d+)\s*[×x*]\s*(\S+)")


def parse_signs(text: str) -> SignTally:
    """Inverse of :func:`format_signs`."""
    style, sep, body = text.partition(":")
    if not sep:
        raise NumeralError(f"missing style prefix in {text!r}")
    by_name = {name: v for v, name in SIGN_NAMES.items()}
    counts: dict[int, int] = {}
    for item in body.split():
        m = _SIGN_ITEM.fullmatch(item)
        if not m or m.group(2).upper() not in by_name:
            raise NumeralError(f"bad sign item {item!r}")
        v = by_name[m.group(2).upper()]
        counts[v] = counts.get(v, 0) + int(m.group(1))
    return SignTally(style.strip(), counts)

"""Diacritic-insensitive matching of transliterated Sumerian words.

Signs are keyed in the usual ASCII convention: ``š`` becomes ``sh``, an acute
accent is sign index 2 and a grave accent index 3, subscript digits are
explicit indices.  So ``šár``, ``shar2`` and ``szar2`` spellings all meet on
the key ``shar2``.  A lookup first tries the indexed key, then the key with
the index dropped, which succeeds only if that bare reading is unambiguous
(``aš`` and ``àš`` both reduce to ``ash``; ``ash`` still resolves to ``aš``
because the exact key wins).  Only accent indices are ever dropped, and only
for input written without an index: ``gur`` never reaches ``gur₇``.
"""

from __future__ import annotations

import re
import unicodedata
from typing import Generic, Iterable, TypeVar

T = TypeVar("T")

_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_INDEX = {"́": "2", "̀": "3"}
_ACCENT_INDEX = re.compile(r"[23]$")
_ANY_INDEX = re.compile(r"\d$")


class UnknownWordError(LookupError):
    def __init__(self, word: str, kind: str = "word", candidates: Iterable[str] = ()):
        self.word = word
        self.candidates = tuple(candidates)
        msg = f"unknown {kind} {word!r}"
        if self.candidates:
            msg += f" (ambiguous: {', '.join(self.candidates)})"
        super().__init__(msg)


def sign_key(atom: str) -> str:
    """ASCII key of a single hyphen-free sign reading."""
    text = unicodedata.normalize("NFD", atom.strip().translate(_SUBSCRIPTS))
    out = []
    index = ""
    for ch in text:
        if ch in _INDEX:
            index = _INDEX[ch]
        elif ch == "̌":  # caron: s + caron = š
            if out and out[-1] == "s":
                out[-1] = "sh"
        elif unicodedata.combining(ch):
            continue
        else:
            out.append(ch.lower())
    key = "".join(out).replace("sz", "sh")
    m = re.search(r"\d+$", key)
    if m:
        return key
    return key + index


def loose_key(key: str) -> str:
    """Drop an accent-derived index; subscript indices name distinct words."""
    return _ACCENT_INDEX.sub("", key)


def split_atoms(text: str) -> list[str]:
    return [a for a in re.split(r"-", text) if a]


class Lexicon(Generic[T]):
    """Maps canonical (possibly hyphenated) words to values.

    Multi-sign words such as ``šár-gal`` are matched greedily, longest first,
    over a sequence of hyphen-separated atoms.
    """

    def __init__(self, entries: Iterable[tuple[str, T]], kind: str = "word"):
        self.kind = kind
        self._exact: dict[tuple[str, ...], tuple[str, T]] = {}
        self._loose: dict[tuple[str, ...], list[tuple[str, T]]] = {}
        self._aliases: dict[tuple[str, ...], tuple[str, T]] = {}
        self.width = 1
        for word, value in entries:
            self.add(word, value)

    def add(self, word: str, value: T, canonical: str | None = None) -> None:
        keys = tuple(sign_key(a) for a in split_atoms(word))
        entry = (canonical or word, value)
        self.width = max(self.width, len(keys))
        if canonical is not None:
            self._aliases[keys] = entry
            return
        self._exact[keys] = entry
        self._loose.setdefault(tuple(loose_key(k) for k in keys), []).append(entry)

    def _lookup(self, keys: tuple[str, ...]) -> tuple[str, T] | None:
        hit = self._exact.get(keys) or self._aliases.get(keys)
        if hit:
            return hit
        if any(_ANY_INDEX.search(k) for k in keys):
            return None
        cands = self._loose.get(tuple(loose_key(k) for k in keys), [])
        if len(cands) == 1:
            return cands[0]
        return None

    def lookup(self, word: str) -> tuple[str, T]:
        keys = tuple(sign_key(a) for a in split_atoms(word))
        hit = self._lookup(keys)
        if hit is None:
            cands = self._loose.get(tuple(loose_key(k) for k in keys), [])
            raise UnknownWordError(word, self.kind, [c for c, _ in cands])
        return hit

    def __contains__(self, word: str) -> bool:
        try:
            self.lookup(word)
        except UnknownWordError:
            return False
        return True

    def tokenize(self, atoms: list[str]) -> list[tuple[str, T]]:
        """Greedy longest-match segmentation of hyphen-separated atoms."""
        keys = [sign_key(a) for a in atoms]
        out = []
        i = 0
        while i < len(keys):
            for w in range(min(self.width, len(keys) - i), 0, -1):
                hit = self._lookup(tuple(keys[i : i + w]))
                if hit:
                    out.append(hit)
                    i += w
                    break
            else:
                cands = self._loose.get((loose_key(keys[i]),), [])
                raise UnknownWordError(atoms[i], self.kind, [c for c, _ in cands])
        return out

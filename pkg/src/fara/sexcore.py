"""Exact sexagesimal numbers.

A :class:`SexValue` is a signed base-60 digit vector with an exponent on the
least significant digit.  All arithmetic runs digit-wise through the kernels
in :mod:`fara.kernels`; no rational or float shortcut is taken.

Literals follow the modern comma/semicolon transcription::

    >>> parse_literal("2,41,0")
    SexValue('2,41,0')
    >>> str(parse_literal("0;3,20") * 18)
    '1'
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

from fara import kernels

BASE = 60

LESS, EQUAL, GREATER = -1, 0, 1


class SexagesimalError(ValueError):
    """Base class for every domain error raised by this package."""


class LiteralError(SexagesimalError):
    """A sexagesimal literal could not be parsed.

    ``position`` is the 0-based character offset of the offending token
    within the text handed to :func:`parse_literal`.
    """

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at offset {position} in {text!r}"
        super().__init__(message)


def _trim(le: list[int], exp: int) -> tuple[tuple[int, ...], int]:
    """Canonicalise a little-endian digit list: returns (MSB-first digits, exponent)."""
    lo = 0
    hi = len(le)
    while hi and le[hi - 1] == 0:
        hi -= 1
    while lo < hi and le[lo] == 0:
        lo += 1
    if lo == hi:
        return (), 0
    return tuple(reversed(le[lo:hi])), exp + lo


@total_ordering
class SexValue:
    """Immutable exact base-60 number.

    ``digits`` are most significant first, each in 0..59, with no leading or
    trailing zero digit; ``point_exp`` is the power of 60 carried by the last
    digit.  Zero is ``sign == 0`` with no digits.
    """

    __slots__ = ("sign", "digits", "point_exp")

    sign: int
    digits: tuple[int, ...]
    point_exp: int

    def __init__(self, sign: int, digits: Iterable[int], point_exp: int = 0):
        digits = tuple(digits)
        for d in digits:
            if not 0 <= d < BASE:
                raise SexagesimalError(f"digit {d} outside 0..59")
        le = list(reversed(digits))
        digits, point_exp = _trim(le, point_exp)
        if not digits:
            sign = 0
        elif sign not in (-1, 1):
            raise SexagesimalError("sign of a nonzero value must be -1 or 1")
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "point_exp", point_exp)

    def __setattr__(self, name, value):
        raise AttributeError("SexValue is immutable")

    @classmethod
    def _from_le(cls, sign: int, le: list[int], exp: int) -> "SexValue":
        digits, exp = _trim(le, exp)
        obj = object.__new__(cls)
        object.__setattr__(obj, "sign", sign if digits else 0)
        object.__setattr__(obj, "digits", digits)
        object.__setattr__(obj, "point_exp", exp)
        return obj

    @classmethod
    def from_int(cls, n: int) -> "SexValue":
        sign = (n > 0) - (n < 0)
        n = abs(n)
        le = []
        while n:
            n, d = divmod(n, BASE)
            le.append(d)
        return cls._from_le(sign, le, 0)

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> "SexValue":
        """Exact conversion; the denominator must divide a power of 60."""
        q = Fraction(q)
        den = q.denominator
        k = 0
        scale = 1
        while scale % den:
            scale *= BASE
            k += 1
            if k > 10_000:
                raise SexagesimalError(f"{q} has no finite sexagesimal expansion")
        v = cls.from_int(q.numerator * (scale // den))
        return v.shift(-k)

    # -- inspection ------------------------------------------------------

    def _le(self) -> list[int]:
        return list(reversed(self.digits))

    def is_zero(self) -> bool:
        return self.sign == 0

    def is_integer(self) -> bool:
        return self.point_exp >= 0

    def __bool__(self) -> bool:
        return self.sign != 0

    def __int__(self) -> int:
        if not self.is_integer():
            raise SexagesimalError(f"{self} is not integer-valued")
        n = 0
        for d in self.digits:
            n = n * BASE + d
        return self.sign * n * BASE**self.point_exp

    def __index__(self) -> int:
        return int(self)

    def to_fraction(self) -> Fraction:
        n = 0
        for d in self.digits:
            n = n * BASE + d
        n *= self.sign
        if self.point_exp >= 0:
            return Fraction(n * BASE**self.point_exp)
        return Fraction(n, BASE**-self.point_exp)

    def shift(self, places: int) -> "SexValue":
        """Multiply by ``60**places``; a pure exponent change."""
        if not self.sign:
            return self
        return SexValue._from_le(self.sign, self._le(), self.point_exp + places)

    # -- protocol --------------------------------------------------------

    def __repr__(self) -> str:
        return f"SexValue({format_literal(self)!r})"

    def __str__(self) -> str:
        return format_literal(self)

    def __hash__(self) -> int:
        return hash((self.sign, self.digits, self.point_exp))

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.sign, self.digits, self.point_exp) == (
            other.sign,
            other.digits,
            other.point_exp,
        )

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return cmp(self, other) < 0

    def __neg__(self) -> "SexValue":
        return SexValue._from_le(-self.sign, self._le(), self.point_exp)

    def __pos__(self) -> "SexValue":
        return self

    def __abs__(self) -> "SexValue":
        return SexValue._from_le(abs(self.sign), self._le(), self.point_exp)

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else sub(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return pow_int(self, n)

    def __divmod__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else divmod_int(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]


SexLike = Union[SexValue, int, str]

ZERO = SexValue(0, ())
ONE = SexValue(1, (1,))


def _coerce(x) -> SexValue:
    if isinstance(x, SexValue):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, int):
        return SexValue.from_int(x)
    return NotImplemented


def as_sex(x: SexLike) -> SexValue:
    """Accept a SexValue, a Python int or a literal string."""
    if isinstance(x, str):
        return parse_literal(x)
    v = _coerce(x)
    if v is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a sexagesimal value")
    return v


# -- literals ------------------------------------------------------------

_TOKEN = re.compile(r"\d+")


def _digit_run(text: str, start: int, stop: int, full: str, offset: int) -> list[int]:
    out = []
    pos = start
    for tok in text[start:stop].split(","):
        tok_start = pos
        pos += len(tok) + 1
        stripped = tok.strip()
        at = offset + tok_start + (len(tok) - len(tok.lstrip()))
        if not stripped:
            raise LiteralError("empty digit", full, at)
        if not _TOKEN.fullmatch(stripped):
            raise LiteralError(f"non-digit token {stripped!r}", full, at)
        d = int(stripped)
        if d >= BASE:
            raise LiteralError(f"digit {d} is not below 60", full, at)
        out.append(d)
    return out


def parse_literal(text: str) -> SexValue:
    """Parse ``[-]d,d,...[;d,d,...]`` into a canonical :class:`SexValue`."""
    full = text
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not stripped:
        raise LiteralError("empty literal", full, 0)
    sign = 1
    if stripped[0] in "-−":
        sign = -1
        stripped = stripped[1:]
        offset += 1
        lead = len(stripped) - len(stripped.lstrip())
        stripped = stripped.lstrip()
        offset += lead
        if not stripped:
            raise LiteralError("sign without digits", full, offset)
    if stripped.count(";") > 1:
        raise LiteralError("more than one ';'", full, offset + stripped.rindex(";"))
    if ";" in stripped:
        semi = stripped.index(";")
        whole = _digit_run(stripped, 0, semi, full, offset)
        frac = _digit_run(stripped, semi + 1, len(stripped), full, offset)
    else:
        whole = _digit_run(stripped, 0, len(stripped), full, offset)
        frac = []
    le = list(reversed(whole + frac))
    return SexValue._from_le(sign, le, -len(frac))


def format_literal(v: SexValue) -> str:
    """Canonical spelling: no '+', no leading zero digits, '0' for zero."""
    if not v.sign:
        return "0"
    digits = list(v.digits)
    exp = v.point_exp
    if exp >= 0:
        whole = digits + [0] * exp
        frac: list[int] = []
    else:
        nfrac = -exp
        if nfrac >= len(digits):
            whole = [0]
            frac = [0] * (nfrac - len(digits)) + digits
        else:
            whole = digits[: len(digits) - nfrac]
            frac = digits[len(digits) - nfrac :]
    out = ",".join(map(str, whole))
    if frac:
        out += ";" + ",".join(map(str, frac))
    return ("-" if v.sign < 0 else "") + out


# -- arithmetic ----------------------------------------------------------


def _aligned(a: SexValue, b: SexValue) -> tuple[list[int], list[int], int]:
    e = min(a.point_exp, b.point_exp)
    la = [0] * (a.point_exp - e) + a._le()
    lb = [0] * (b.point_exp - e) + b._le()
    return la, lb, e


def cmp(a: SexValue, b: SexValue) -> int:
    """Total order on exact values: -1, 0 or 1."""
    if a.sign != b.sign:
        return -1 if a.sign < b.sign else 1
    if not a.sign:
        return EQUAL
    la, lb, _ = _aligned(a, b)
    return a.sign * kernels.cmp_mag(la, lb)


def add(a: SexValue, b: SexValue) -> SexValue:
    if not a.sign:
        return b
    if not b.sign:
        return a
    la, lb, e = _aligned(a, b)
    if a.sign == b.sign:
        return SexValue._from_le(a.sign, kernels.add_mag(la, lb), e)
    c = kernels.cmp_mag(la, lb)
    if c == 0:
        return ZERO
    if c > 0:
        return SexValue._from_le(a.sign, kernels.sub_mag(la, lb), e)
    return SexValue._from_le(b.sign, kernels.sub_mag(lb, la), e)


def sub(a: SexValue, b: SexValue) -> SexValue:
    return add(a, -b)


def mul(a: SexValue, b: SexValue) -> SexValue:
    if not a.sign or not b.sign:
        return ZERO
    return SexValue._from_le(
        a.sign * b.sign, kernels.mul_mag(a._le(), b._le()), a.point_exp + b.point_exp
    )


def _int_le(v: SexValue, what: str) -> list[int]:
    if not v.is_integer():
        raise SexagesimalError(f"{what} {v} is not integer-valued")
    return [0] * v.point_exp + v._le()


def divmod_int(a: SexValue, d: SexValue) -> tuple[SexValue, SexValue]:
    """Integer division with remainder by base-60 long division.

    ``a`` must be a non-negative integer and ``d`` a positive integer; the
    result satisfies ``a == q*d + r`` with ``0 <= r < d``.
    """
    if d.sign == 0:
        raise ZeroDivisionError("division by zero")
    if d.sign < 0:
        raise SexagesimalError(f"divisor {d} must be positive")
    if a.sign < 0:
        raise SexagesimalError(f"dividend {a} must be non-negative")
    la = _int_le(a, "dividend")
    ld = _int_le(d, "divisor")
    if not a.sign:
        return ZERO, ZERO
    q, r = kernels.divmod_mag(la, ld)
    return SexValue._from_le(1, q, 0), SexValue._from_le(1, r, 0)


def pow_int(a: SexValue, n: int) -> SexValue:
    """Exact ``a**n`` for ``n >= 0`` by square-and-multiply."""
    if n < 0:
        raise SexagesimalError("negative exponents need a reciprocal; see fara.regnum")
    result = ONE
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def round_to_multiple(x: SexValue, step: SexValue) -> SexValue:
    """Nearest multiple of ``step``; exact ties go away from zero."""
    if step.sign <= 0:
        raise SexagesimalError(f"step {step} must be positive")
    if not x.sign:
        return ZERO
    mag = abs(x)
    lx, ls, e = _aligned(mag, step)
    q, r = kernels.divmod_mag(lx, ls)
    # round up when 2r >= step
    if kernels.cmp_mag(kernels.mul_small(r, 2), ls) >= 0:
        q = kernels.add_mag(q, [1])
    multiple = SexValue._from_le(1, q, 0)
    result = mul(multiple, step)
    return -result if x.sign < 0 else result


def sum_values(values: Iterable[SexValue]) -> SexValue:
    total = ZERO
    for v in values:
        total = add(total, v)
    return total


def integer_part(v: SexValue) -> SexValue:
    """Truncate towards zero by dropping the fractional digits."""
    if v.point_exp >= 0:
        return v
    keep = len(v.digits) + v.point_exp
    if keep <= 0:
        return ZERO
    return SexValue(v.sign, v.digits[:keep], 0)


def digit_sign_count(v: SexValue) -> int:
    """Number of tens and unit wedges needed to write ``v`` in place-value signs."""
    return sum(d // 10 + d % 10 for d in v.digits)

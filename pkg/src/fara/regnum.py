"""Regular numbers (a-rá-gub-ba) and finite sexagesimal reciprocals."""

from __future__ import annotations

import heapq
from typing import NamedTuple

from fara import kernels
from fara.sexcore import SexagesimalError, SexLike, SexValue, as_sex


class IrregularDivisorError(SexagesimalError):
    """Raised when a reciprocal is requested for a number with a prime factor
    other than 2, 3 or 5.  ``residue`` is the part coprime to 30."""

    def __init__(self, n: SexValue, residue: int):
        self.n = n
        self.residue = residue
        super().__init__(
            f"{n} is irregular: residue {SexValue.from_int(residue)} "
            f"(decimal {residue}) shares no factor with 60"
        )


class RegularityWitness(NamedTuple):
    alpha: int
    beta: int
    gamma: int
    residue: int

    @property
    def regular(self) -> bool:
        return self.residue == 1


def _positive_int_le(n: SexLike) -> tuple[SexValue, list[int]]:
    v = as_sex(n)
    if not v.is_integer() or v.sign <= 0:
        raise SexagesimalError(f"{v} is not a positive integer")
    return v, [0] * v.point_exp + list(reversed(v.digits))


def strip_235(n: SexLike) -> RegularityWitness:
    """Divide out every factor 2, 3 and 5 by repeated short division."""
    _, le = _positive_int_le(n)
    exps = []
    for p in (2, 3, 5):
        k = 0
        while True:
            q, r = kernels.divmod_small(le, p)
            if r:
                break
            le = q
            k += 1
        exps.append(k)
    residue = 0
    for d in reversed(le):
        residue = residue * 60 + d
    return RegularityWitness(exps[0], exps[1], exps[2], residue)


def is_regular(n: SexLike) -> bool:
    return strip_235(n).residue == 1


def reciprocal(n: SexLike) -> SexValue:
    """Finite base-60 expansion of ``1/n`` for a regular integer ``n``.

    Computed as the scribes would have: carry a remainder, multiply it by 60,
    read off one digit, repeat until the remainder vanishes.
    """
    v, le = _positive_int_le(n)
    w = strip_235(v)
    if w.residue != 1:
        raise IrregularDivisorError(v, w.residue)
    digits = []
    rem = [1]
    # 1 = q0 * n + r; the integer part is 1 only when n == 1
    q, rem = kernels.divmod_mag(rem, le)
    whole = q[0] if q else 0
    while rem:
        q, rem = kernels.divmod_mag([0] + rem, le)
        digits.append(q[0] if q else 0)
    return SexValue(1, [whole] + digits, -len(digits))


def inverse(x: SexLike) -> SexValue:
    """Reciprocal of any value whose scaled integer part is regular.

    ``x = m * 60**e`` with ``m`` an integer, so ``1/x = reciprocal(m) * 60**-e``;
    e.g. ``inverse('1;20') == '0;45'``.
    """
    v = as_sex(x)
    if not v.sign:
        raise ZeroDivisionError("reciprocal of zero")
    m = SexValue(1, v.digits, 0)
    r = reciprocal(m).shift(-v.point_exp)
    return -r if v.sign < 0 else r


def divide(a: SexLike, b: SexLike) -> SexValue:
    """``a / b`` as multiplication by the reciprocal of a regular divisor."""
    return as_sex(a) * inverse(b)


def regular_numbers(limit: int) -> list[int]:
    """All regular integers ``1 <= n <= limit`` in ascending order."""
    if limit < 1:
        return []
    out = []
    heap = [1]
    seen = {1}
    while heap:
        n = heapq.heappop(heap)
        out.append(n)
        for p in (2, 3, 5):
            m = n * p
            if m <= limit and m not in seen:
                seen.add(m)
                heapq.heappush(heap, m)
    return out


def reciprocal_table(limit: int) -> list[tuple[SexValue, SexValue]]:
    """``(n, 1/n)`` for every regular ``n <= limit``, ascending."""
    if limit < 1:
        raise SexagesimalError("limit must be at least 1")
    return [(SexValue.from_int(n), reciprocal(n)) for n in regular_numbers(limit)]


def expansion_bound(w: RegularityWitness) -> int:
    """Upper bound on the number of fractional digits of the reciprocal."""
    return max((w.alpha + 1) // 2, w.beta, w.gamma)


__all__ = [
    "IrregularDivisorError",
    "RegularityWitness",
    "strip_235",
    "is_regular",
    "reciprocal",
    "inverse",
    "divide",
    "regular_numbers",
    "reciprocal_table",
    "expansion_bound",
]

"""Independent reference implementations used by the tests.

Nothing here imports the package: values are built from Python ints and
``fractions.Fraction`` only.
"""

from fractions import Fraction


def int_to_le(n: int) -> list[int]:
    out = []
    while n:
        n, d = divmod(n, 60)
        out.append(d)
    return out


def le_to_int(digits) -> int:
    n = 0
    for d in reversed(list(digits)):
        n = n * 60 + d
    return n


def literal_value(text: str) -> Fraction:
    """Value of a Neugebauer literal such as ``-1,2;30``."""
    text = text.strip()
    neg = text.startswith("-")
    text = text.lstrip("-")
    whole, _, frac = text.partition(";")
    v = Fraction(0)
    for d in whole.split(","):
        v = v * 60 + int(d)
    scale = Fraction(1, 60)
    for d in frac.split(",") if frac else []:
        v += int(d) * scale
        scale /= 60
    return -v if neg else v


def is_regular_brute(n: int, max_k: int = 12) -> bool:
    """n divides some 60^k."""
    return any(60**k % n == 0 for k in range(max_k + 1))


def sexagesimal_places(q: Fraction) -> int | None:
    """Number of fractional base-60 places of q, or None if infinite."""
    for k in range(64):
        if (q * 60**k).denominator == 1:
            return k
    return None

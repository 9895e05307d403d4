"""Ration arithmetic: per-head totals, donkey barley, granary division."""

from __future__ import annotations

from dataclasses import dataclass

from fara.metrology import (
    ADDITIVE,
    CAPACITY_GRANARY,
    FORMS,
    MetrologyError,
    MixedQuantity,
    decompose_mixed,
    get_system,
    subtractive_respelling,
)
from fara.sexcore import SexLike, SexValue, as_sex, divmod_int

BIG_UNITS = {"gur": "capacity-gur", "líd-ga": "capacity-lidga"}
_BIG_ALIASES = {"lidga": "líd-ga", "lid-ga": "líd-ga", "lid2-ga": "líd-ga"}


class RationError(MetrologyError):
    pass


@dataclass(frozen=True)
class RationResult:
    total: MixedQuantity
    heads: SexValue
    per_head: MixedQuantity
    remainder: SexValue

    def __post_init__(self):
        if self.total.value != self.heads * self.per_head.value + self.remainder:
            raise RationError("total does not equal heads × per head + remainder")


def _heads(heads: SexLike) -> SexValue:
    h = as_sex(heads)
    if not h.is_integer() or h < 1:
        raise RationError(f"head count {h} must be a whole number of at least 1")
    return h


def capacity_total(
    heads: SexLike, per_head: MixedQuantity, form: str = ADDITIVE
) -> MixedQuantity:
    """``heads`` times a per-head allowance, spelled in the allowance's system."""
    h = _heads(heads)
    return decompose_mixed(h * per_head.value, per_head.system, form)


def donkey_ration(
    heads: SexLike,
    big_unit: str = "gur",
    form: str = ADDITIVE,
    per_head: MixedQuantity | None = None,
) -> MixedQuantity:
    """Barley for plough donkeys at one nigida a head.

    The count of donkeys is divided by 5 for gur or by 4 for líd-ga; the
    quotient is the big-unit count and the remainder the nigida count.  A
    different ``per_head`` falls back to :func:`capacity_total`.
    """
    h = _heads(heads)
    big_unit = _BIG_ALIASES.get(big_unit, big_unit)
    if big_unit not in BIG_UNITS:
        raise RationError(f"big unit must be gur or líd-ga, not {big_unit!r}")
    if form not in FORMS:
        raise RationError(f"unknown form {form!r}")
    system = get_system(BIG_UNITS[big_unit])
    if per_head is not None:
        if per_head.system != system.name:
            per_head = decompose_mixed(per_head.value, system)
        return capacity_total(h, per_head, form)
    nigida = system.factor("nigida")
    divisor, _ = divmod_int(system.factor(big_unit), nigida)
    q, r = divmod_int(h, divisor)
    parts = tuple((u, c) for u, c in ((big_unit, q), ("nigida", r)) if c)
    result = MixedQuantity(system.name, parts)
    if form != ADDITIVE:
        respelled = decompose_mixed(result.value, system, form)
        if respelled.subtractive:
            return respelled
    return result


def donkey_ration_subtractive(heads: SexLike, big_unit: str = "gur") -> MixedQuantity | None:
    """The ``X big - k nigida`` spelling regardless of length, if one exists."""
    return subtractive_respelling(donkey_ration(heads, big_unit))


def granary_division(
    stock: MixedQuantity | SexLike, per_head: SexLike | MixedQuantity
) -> RationResult:
    """How many people a stock feeds at ``per_head`` sìla, and what is repaid."""
    if not isinstance(stock, MixedQuantity):
        stock = decompose_mixed(as_sex(stock), CAPACITY_GRANARY)
    per = per_head.value if isinstance(per_head, MixedQuantity) else as_sex(per_head)
    if per.sign <= 0:
        raise RationError(f"allowance {per} must be positive")
    if not per.is_integer() or not stock.value.is_integer():
        raise RationError("granary division works in whole sìla")
    heads, rem = divmod_int(stock.value, per)
    return RationResult(
        total=stock,
        heads=heads,
        per_head=decompose_mixed(per, stock.system),
        remainder=rem,
    )

"""Fara-period length, area and capacity units.

Conversions are exact: every ladder factor is a regular integer, so dividing
by one is multiplication by a finite reciprocal.  The square-field routines
reproduce the scribal chain step by step (sar, then iku via éš squared, then
bùr via multiplication by 0;3,20) and return a printable trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from fara.regnum import divide, reciprocal
from fara.sexcore import (
    ONE,
    ZERO,
    SexagesimalError,
    SexLike,
    SexValue,
    as_sex,
    digit_sign_count,
    divmod_int,
    integer_part,
    parse_literal,
)
from fara.translit import Lexicon, UnknownWordError


class MetrologyError(SexagesimalError):
    pass


def _s(text: str) -> SexValue:
    return parse_literal(text)


@dataclass(frozen=True)
class UnitSystem:
    """An ordered ladder of units, smallest (the base unit) first.

    ``approx`` holds modern magnitudes for documentation only; nothing
    computes with them.
    """

    name: str
    ladder: tuple[tuple[str, SexValue], ...]
    approx: dict[str, str] = field(default_factory=dict, compare=False)
    aliases: dict[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        lex: Lexicon[SexValue] = Lexicon(self.ladder, kind=f"{self.name} unit")
        for alias, unit in self.aliases.items():
            lex.add(alias, self.factor(unit), canonical=unit)
        object.__setattr__(self, "_lexicon", lex)

    @property
    def base(self) -> str:
        return self.ladder[0][0]

    @property
    def units(self) -> list[str]:
        return [u for u, _ in self.ladder]

    def factor(self, unit: str) -> SexValue:
        for u, f in self.ladder:
            if u == unit:
                return f
        raise MetrologyError(f"{unit!r} is not a {self.name} unit")

    def canonical(self, unit: str) -> str:
        """Resolve a spelling such as ``lid2-ga`` or ``sila3`` to the ladder name."""
        try:
            return self._lexicon.lookup(unit)[0]
        except UnknownWordError:
            raise MetrologyError(f"unknown {self.name} unit {unit!r}") from None

    def __contains__(self, unit: str) -> bool:
        try:
            self.canonical(unit)
        except MetrologyError:
            return False
        return True


_CAPACITY = (("sìla", _s("1")), ("bán", _s("10")), ("nigida", _s("1,0")))
_CAP_APPROX = {"sìla": "about 1 litre"}

LENGTH = UnitSystem(
    "length",
    (("ninda", _s("1")), ("éš", _s("10"))),
    approx={"ninda": "about 6 m (ninda-DU)"},
    aliases={"ninda-DU": "ninda", "ninda-du": "ninda"},
)
AREA = UnitSystem(
    "area",
    (
        ("sar", _s("1")),
        ("iku", _s("1,40")),
        ("bùr", _s("30,0")),
        ("šár", _s("30,0,0")),
        ("šár-gal", _s("30,0,0,0")),
    ),
    approx={"sar": "one square ninda, about 36 m²"},
)
CAPACITY_LIDGA = UnitSystem(
    "capacity-lidga",
    _CAPACITY + (("líd-ga", _s("4,0")),),
    approx=_CAP_APPROX,
    aliases={"lidga": "líd-ga"},
)
CAPACITY_GUR = UnitSystem(
    "capacity-gur", _CAPACITY + (("gur", _s("5,0")),), approx=_CAP_APPROX
)
CAPACITY_GRANARY = UnitSystem(
    "capacity-granary",
    _CAPACITY + (("gur₇", _s("5,20,0,0")),),
    approx=_CAP_APPROX,
)

SYSTEMS: dict[str, UnitSystem] = {
    s.name: s for s in (LENGTH, AREA, CAPACITY_LIDGA, CAPACITY_GUR, CAPACITY_GRANARY)
}
_SYSTEM_ALIASES = {
    "lidga": "capacity-lidga",
    "líd-ga": "capacity-lidga",
    "gur": "capacity-gur",
    "granary": "capacity-granary",
    "gur₇": "capacity-granary",
    "gur7": "capacity-granary",
}


def get_system(name: str | UnitSystem) -> UnitSystem:
    if isinstance(name, UnitSystem):
        return name
    key = _SYSTEM_ALIASES.get(name, name)
    try:
        return SYSTEMS[key]
    except KeyError:
        raise MetrologyError(f"unknown unit system {name!r}") from None


def systems_with(*units: str) -> list[UnitSystem]:
    return [s for s in SYSTEMS.values() if all(u in s for u in units)]


def convert_exact(
    q: SexLike, from_unit: str, to_unit: str, system: str | UnitSystem | None = None
) -> SexValue:
    """Express ``q`` ``from_unit`` in ``to_unit``; both must share a ladder."""
    q = as_sex(q)
    if system is None:
        found = systems_with(from_unit, to_unit)
        if not found:
            known = systems_with(from_unit) and systems_with(to_unit)
            if not known:
                bad = to_unit if systems_with(from_unit) else from_unit
                raise MetrologyError(f"unknown unit {bad!r}")
            raise MetrologyError(f"cannot convert {from_unit} to {to_unit}: different systems")
        sys_ = found[0]
    else:
        sys_ = get_system(system)
    a = sys_.factor(sys_.canonical(from_unit))
    b = sys_.factor(sys_.canonical(to_unit))
    return divide(q * a, b)


# -- mixed quantities ------------------------------------------------------

ADDITIVE = "additive"
SUBTRACTIVE_IF_SHORTER = "subtractive-if-shorter"
FORMS = (ADDITIVE, SUBTRACTIVE_IF_SHORTER)


@dataclass(frozen=True)
class MixedQuantity:
    """A measured amount spelled as whole counts of units.

    ``parts`` run from the largest unit down.  ``subtractive`` is an optional
    ``(unit, count)`` deducted from the parts, as in ``20 líd-ga - 3 nigida``.
    ``remainder_base`` holds any fraction of the base unit.
    """

    system: str
    parts: tuple[tuple[str, SexValue], ...] = ()
    subtractive: tuple[str, SexValue] | None = None
    remainder_base: SexValue = ZERO

    def __post_init__(self):
        sys_ = get_system(self.system)
        object.__setattr__(self, "system", sys_.name)
        prev = None
        for unit, count in self.parts:
            f = sys_.factor(unit)
            if count.sign < 0 or not count.is_integer():
                raise MetrologyError(f"count {count} of {unit} is not a whole number")
            if prev is not None and f >= prev:
                raise MetrologyError(f"{unit} is out of descending order")
            prev = f
        if self.subtractive is not None:
            unit, count = self.subtractive
            sys_.factor(unit)
            if count.sign <= 0 or not count.is_integer():
                raise MetrologyError(f"deduction {count} {unit} must be a positive whole number")
        if self.remainder_base.sign < 0 or self.remainder_base >= ONE:
            raise MetrologyError("remainder_base must lie in [0, 1)")
        if self.value.sign < 0:
            raise MetrologyError("a quantity cannot be negative")

    @property
    def unit_system(self) -> UnitSystem:
        return SYSTEMS[self.system]

    @property
    def value(self) -> SexValue:
        """Total in base units."""
        sys_ = SYSTEMS[self.system]
        total = self.remainder_base
        for unit, count in self.parts:
            total = total + count * sys_.factor(unit)
        if self.subtractive is not None:
            unit, count = self.subtractive
            total = total - count * sys_.factor(unit)
        return total

    @property
    def form(self) -> str:
        return "subtractive" if self.subtractive else "additive"

    def signs(self) -> int:
        """Wedges needed to write every count on the tablet."""
        counts = [c for _, c in self.parts]
        if self.subtractive:
            counts.append(self.subtractive[1])
        return sum(digit_sign_count(c) for c in counts)

    def in_unit(self, unit: str) -> SexValue:
        return convert_exact(self.value, self.unit_system.base, unit, self.system)

    def __str__(self) -> str:
        return format_quantity(self)


def format_quantity(q: MixedQuantity) -> str:
    base = q.unit_system.base
    terms = []
    rem = q.remainder_base
    for unit, count in q.parts:
        if unit == base:
            count, rem = count + rem, ZERO
        terms.append(f"{count} {unit}")
    if rem:
        terms.append(f"{rem} {base}")
    if not terms:
        terms.append(f"0 {base}")
    text = " ".join(terms)
    if q.subtractive:
        unit, count = q.subtractive
        text += f" - {count} {unit}"
    return text


def parse_quantity(text: str, system: str | UnitSystem | None = None) -> MixedQuantity:
    """Parse ``"3 líd-ga 1 nigida 2 bán"`` or ``"20 líd-ga - 3 nigida"``.

    Without ``system`` the first system containing every named unit is used
    (length, area, then the capacity ladders); values agree across ladders
    for shared units.
    """
    tokens = text.split()
    if not tokens:
        raise MetrologyError("empty quantity")
    pairs: list[tuple[SexValue, str]] = []
    deduction = None
    i = 0
    while i < len(tokens):
        if tokens[i] in ("-", "−"):
            if deduction is not None or not pairs or len(tokens) - i != 3:
                raise MetrologyError(f"a single deduction must close the quantity: {text!r}")
            deduction = (parse_literal(tokens[i + 1]), tokens[i + 2])
            break
        if i + 1 >= len(tokens):
            raise MetrologyError(f"count {tokens[i]!r} has no unit in {text!r}")
        pairs.append((parse_literal(tokens[i]), tokens[i + 1]))
        i += 2
    names = [u for _, u in pairs] + ([deduction[1]] if deduction else [])
    if system is None:
        found = systems_with(*names)
        if not found:
            raise MetrologyError(f"no single unit system holds {', '.join(names)}")
        sys_ = found[0]
    else:
        sys_ = get_system(system)
    parts = []
    rem = ZERO
    for count, unit in pairs:
        unit = sys_.canonical(unit)
        if unit == sys_.base and not count.is_integer():
            whole = integer_part(count)
            rem = count - whole
            count = whole
        parts.append((unit, count))
    sub = (sys_.canonical(deduction[1]), deduction[0]) if deduction else None
    return MixedQuantity(sys_.name, tuple(parts), sub, rem)


def _additive(q: SexValue, sys_: UnitSystem) -> MixedQuantity:
    whole = integer_part(q)
    rem = q - whole
    parts = []
    rest = whole
    ladder = list(sys_.ladder)
    for unit, f in reversed(ladder):
        count, rest = divmod_int(rest, f)
        if count:
            parts.append((unit, count))
    return MixedQuantity(sys_.name, tuple(parts), None, rem)


def subtractive_respelling(q: MixedQuantity) -> MixedQuantity | None:
    """``(c+1) big - k unit`` alternative to an additive spelling, if one exists.

    The deficit below the next whole big unit must be a whole number of a
    single smaller unit; the largest such unit is used.
    """
    if q.subtractive or q.remainder_base or not q.value:
        return None
    sys_ = q.unit_system
    big, big_f = sys_.ladder[-1]
    count = ZERO
    if q.parts and q.parts[0][0] == big:
        count = q.parts[0][1]
    below = q.value - count * big_f
    if not below:
        return None
    deficit = big_f - below
    for unit, f in reversed(sys_.ladder[:-1]):
        k, r = divmod_int(deficit, f)
        if not r:
            return MixedQuantity(sys_.name, ((big, count + 1),), (unit, k))
    return None


def decompose_mixed(
    q: SexLike, system: str | UnitSystem, form: str = ADDITIVE
) -> MixedQuantity:
    """Spell ``q`` base units as whole counts, largest unit first.

    ``subtractive-if-shorter`` switches to ``X big - r`` when the part left
    over below the largest unit is under half of it and the subtractive
    spelling needs fewer wedges; this yields ``20 líd-ga - 3 nigida`` for 77
    nigida but keeps ``2 líd-ga 3 nigida`` for 11.
    """
    q = as_sex(q)
    if q.sign < 0:
        raise MetrologyError(f"cannot decompose negative quantity {q}")
    if form not in FORMS:
        raise MetrologyError(f"unknown form {form!r}; expected one of {FORMS}")
    sys_ = get_system(system)
    additive = _additive(q, sys_)
    if form == ADDITIVE:
        return additive
    alt = subtractive_respelling(additive)
    if alt is None:
        return additive
    big_f = sys_.ladder[-1][1]
    below = big_f - alt.subtractive[1] * sys_.factor(alt.subtractive[0])
    if below * 2 < big_f and alt.signs() < additive.signs():
        return alt
    return additive


# -- square fields -------------------------------------------------------


class TraceStep(NamedTuple):
    label: str
    value: SexValue | MixedQuantity
    unit: str = ""

    def __str__(self) -> str:
        if isinstance(self.value, MixedQuantity):
            return f"{self.label}: {self.value}"
        return f"{self.label}: {self.value} {self.unit}".rstrip()


def format_trace(trace: Iterable[TraceStep]) -> str:
    return "\n".join(str(s) for s in trace)


RECIP_18 = _s("0;3,20")
RECIP_100 = _s("0;0,36")
TWO_AND_QUARTER = _s("2;15")


def _bur_from_iku(iku: SexValue, recip18: SexValue, direct: bool) -> tuple[SexValue, str]:
    if direct:
        q, r = divmod_int(iku, SexValue.from_int(18)) if iku.is_integer() else (None, None)
        if r is not None and not r:
            return q, "÷ 18"
    return iku * recip18, f"× {recip18} (for 1/18)"


def _area_result(bur: SexValue) -> MixedQuantity:
    return decompose_mixed(bur * AREA.factor("bùr"), AREA)


def _positive_side(side: SexLike) -> SexValue:
    side = as_sex(side)
    if side.sign <= 0:
        raise MetrologyError(f"side {side} must be positive")
    return side


def square_area_scribal(
    side: SexLike, direct_division: bool = False
) -> tuple[MixedQuantity, list[TraceStep]]:
    """Area of a square field of ``side`` ninda, computed the scribal way.

    For a side that is a whole number of éš (10 ninda) the iku count is the
    square of the side in éš; otherwise the sar total is multiplied by the
    reciprocal of 1,40.  The iku count becomes bùr through 0;3,20, unless
    ``direct_division`` is set and the count is a multiple of 18.
    """
    side = _positive_side(side)
    trace = [TraceStep("side", side, "ninda")]
    sar = side * side
    trace.append(TraceStep("side²", sar, "sar"))
    esh, r = divmod_int(side, SexValue.from_int(10)) if side.is_integer() else (None, ONE)
    if not r:
        trace.append(TraceStep("side in éš", esh, "éš"))
        iku = esh * esh
        trace.append(TraceStep("éš²", iku, "iku"))
    else:
        iku = sar * reciprocal(100)
        trace.append(TraceStep(f"× {RECIP_100} (for 1/1,40)", iku, "iku"))
    bur, how = _bur_from_iku(iku, RECIP_18, direct_division)
    trace.append(TraceStep(how, bur, "bùr"))
    result = _area_result(bur)
    trace.append(TraceStep("area", result))
    return result, trace


@dataclass(frozen=True)
class ErrorModel:
    """Substitutions that reproduce a scribe's route.

    ``recip18`` replaces the reciprocal of 18 (0;3,30 on TSŠ No.188);
    ``via_15_square`` converts sar to iku through 2¼ iku = 15² sar.
    """

    recip18: SexValue | None = None
    via_15_square: bool = False

    @property
    def names(self) -> list[str]:
        out = []
        if self.recip18 is not None:
            out.append(f"recip18={self.recip18}")
        if self.via_15_square:
            out.append("via-15-square")
        return out

    def __str__(self) -> str:
        return " + ".join(self.names) or "none"


ERROR_MODEL_NAMES = ("recip18", "via-15-square")
_DEFAULT_WRONG_RECIP18 = _s("0;3,30")


def parse_error_model(text: str | Iterable[str] | ErrorModel | None) -> ErrorModel:
    """Build an :class:`ErrorModel` from names.

    Accepted items: ``via-15-square``; ``recip18`` (meaning 0;3,30);
    ``recip18=<literal>`` or ``recip18→<literal>``.  A string may join
    several items with ``+``.
    """
    if text is None:
        return ErrorModel()
    if isinstance(text, ErrorModel):
        return text
    items: list[str] = []
    for chunk in [text] if isinstance(text, str) else text:
        items.extend(p.strip() for p in chunk.split("+") if p.strip())
    recip = None
    via15 = False
    for item in items:
        name, _, arg = item.replace("→", "=").replace("->", "=").partition("=")
        name = name.strip()
        if name == "via-15-square" and not arg:
            via15 = True
        elif name == "recip18":
            recip = parse_literal(arg) if arg.strip() else _DEFAULT_WRONG_RECIP18
        else:
            raise MetrologyError(
                f"unknown error model {item!r}; expected one of {ERROR_MODEL_NAMES}"
            )
    return ErrorModel(recip, via15)


def square_area_error_replay(
    side: SexLike, error_model: str | Iterable[str] | ErrorModel | None
) -> tuple[MixedQuantity, list[TraceStep]]:
    """Replay a square-field computation with documented scribal substitutions.

    With ``via-15-square`` the route is 2¼ × (side/15)² iku; the iku-to-bùr
    step uses the (possibly wrong) reciprocal of 18, and the 2¼ factor is
    applied last as a double plus a quarter, as on TSŠ No.188.  Without any
    substitution the result equals :func:`square_area_scribal`.
    """
    model = parse_error_model(error_model)
    side = _positive_side(side)
    recip18 = model.recip18 if model.recip18 is not None else RECIP_18
    if not model.via_15_square:
        if model.recip18 is None:
            return square_area_scribal(side)
        result, trace = square_area_scribal(side)
        iku = next(s.value for s in trace if s.unit == "iku")
        bur = iku * recip18
        trace = [s for s in trace if s.unit not in ("bùr",) and s.label != "area"]
        trace.append(TraceStep(f"× {recip18} (for 1/18)", bur, "bùr"))
        result = _area_result(bur)
        trace.append(TraceStep("area", result))
        return result, trace
    trace = [TraceStep("side", side, "ninda")]
    fifteens = divide(side, 15)
    trace.append(TraceStep("side ÷ 15", fifteens, "ninda×15"))
    squares = fifteens * fifteens
    trace.append(TraceStep("squared", squares, "iku×2;15"))
    per = squares * recip18
    trace.append(TraceStep(f"× {recip18} (for 1/18)", per, "bùr×2;15"))
    double = per * 2
    quarter = per * _s("0;15")
    trace.append(TraceStep("× 2", double, "bùr"))
    trace.append(TraceStep("× 0;15", quarter, "bùr"))
    bur = double + quarter
    trace.append(TraceStep("sum", bur, "bùr"))
    result = _area_result(bur)
    trace.append(TraceStep("area", result))
    return result, trace


def recompose(parts: Sequence[tuple[str, SexLike]], system: str | UnitSystem) -> SexValue:
    """Base-unit total of ``(unit, count)`` pairs."""
    sys_ = get_system(system)
    total = ZERO
    for unit, count in parts:
        total = total + as_sex(count) * sys_.factor(sys_.canonical(unit))
    return total

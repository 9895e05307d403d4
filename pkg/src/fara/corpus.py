"""Tablet records and the verifier that replays them.

A corpus file is plain text: blank-line separated blocks of ``key: value``
lines, ``#`` comments allowed.  Every block needs ``id``, ``kind`` and
``recorded``; the remaining keys depend on the kind:

==============  ==================================================
kind            keys
==============  ==================================================
mul             ``a``, ``b``
granary-div     ``stock`` (quantity), ``per-head`` (sìla)
square-area     ``side`` (ninda); rows separated by ``|``
capacity-total  ``heads``, ``per-head`` (quantity), ``system``
donkey-ration   ``heads``, ``big-unit`` (gur or líd-ga)
==============  ==================================================

Optional keys: ``expected`` (``correct`` or ``scribal-error``),
``recorded-form`` (``additive`` or ``subtractive``), ``error-model`` (square
areas only) and ``comment``.
"""

from __future__ import annotations

import re
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable, Iterable

from fara.metrology import (
    ADDITIVE,
    SUBTRACTIVE_IF_SHORTER,
    ErrorModel,
    MixedQuantity,
    parse_error_model,
    parse_quantity,
    square_area_error_replay,
    square_area_scribal,
)
from fara.rations import capacity_total, donkey_ration, granary_division
from fara.sexcore import LiteralError, SexagesimalError, SexValue, parse_literal

MATCH = "match"
ERROR_REPRODUCED = "error-reproduced"
MISMATCH = "mismatch"
STATUSES = (MATCH, ERROR_REPRODUCED, MISMATCH)

CORRECT = "correct"
SCRIBAL_ERROR = "scribal-error"


class CorpusError(SexagesimalError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class GranaryOutcome:
    heads: SexValue
    repaid: MixedQuantity

    def __str__(self) -> str:
        return f"{self.heads} repaid {self.repaid}"

    def key(self):
        return (self.heads, self.repaid.value)


@dataclass(frozen=True)
class Rows:
    items: tuple[Any, ...]

    def __str__(self) -> str:
        return " | ".join(str(i) for i in self.items)


@dataclass
class TabletRecord:
    id: str
    kind: str
    inputs: dict[str, Any]
    recorded: Any
    recorded_form: str | None = None
    error_model: ErrorModel | None = None
    expected: str = CORRECT
    comment: str = ""
    line: int = 0
    fields: dict[str, str] = field(default_factory=dict, repr=False)


@dataclass(frozen=True)
class Verdict:
    id: str
    status: str
    computed: str
    recorded: str
    trace: tuple[str, ...] | None = None
    detail: str = ""


# -- kinds -----------------------------------------------------------------


def _value_key(x):
    if isinstance(x, MixedQuantity):
        return x.value
    if isinstance(x, GranaryOutcome):
        return x.key()
    if isinstance(x, Rows):
        return tuple(_value_key(i) for i in x.items)
    return x


def _forms(x) -> list[str]:
    if isinstance(x, MixedQuantity):
        return [x.form]
    if isinstance(x, Rows):
        return [f for i in x.items for f in _forms(i)]
    return []


@dataclass(frozen=True)
class Kind:
    name: str
    required: tuple[str, ...]
    optional: tuple[str, ...]
    parse_inputs: Callable[[dict[str, str]], dict[str, Any]]
    parse_recorded: Callable[[str, dict[str, Any]], Any]
    compute: Callable[[dict[str, Any], ErrorModel | None, str], tuple[Any, list[str]]]
    error_models: bool = False


def _rows(text: str) -> list[str]:
    return [r.strip() for r in text.split("|")]


def _mul_compute(inp, model, form):
    return inp["a"] * inp["b"], [f"{inp['a']} × {inp['b']} = {inp['a'] * inp['b']}"]


def _granary_inputs(f):
    stock = parse_quantity(f["stock"], "capacity-granary")
    per = f["per-head"]
    per_q = parse_quantity(per, "capacity-granary") if " " in per.strip() else None
    return {"stock": stock, "per-head": per_q.value if per_q else parse_literal(per)}


def _granary_recorded(text, inp):
    m = re.fullmatch(r"\s*(\S+)\s+repaid\s+(.+)", text)
    if not m:
        raise SexagesimalError(f"expected '<men> repaid <quantity>', got {text!r}")
    return GranaryOutcome(parse_literal(m.group(1)), parse_quantity(m.group(2), "capacity-granary"))


def _granary_compute(inp, model, form):
    r = granary_division(inp["stock"], inp["per-head"])
    repaid = parse_quantity(f"{r.remainder} sìla", r.total.system)
    trace = [
        f"stock: {r.total.value} sìla",
        f"{r.total.value} = {inp['per-head']} × {r.heads} + {r.remainder}",
    ]
    return GranaryOutcome(r.heads, repaid), trace


def _square_inputs(f):
    return {"side": [parse_literal(s) for s in _rows(f["side"])]}


def _square_recorded(text, inp):
    rows = [parse_quantity(r, "area") for r in _rows(text)]
    if len(rows) != len(inp["side"]):
        raise SexagesimalError(f"{len(inp['side'])} sides but {len(rows)} recorded areas")
    return Rows(tuple(rows))


def _square_compute(inp, model, form):
    results = []
    trace: list[str] = []
    for side in inp["side"]:
        if model is None:
            q, steps = square_area_scribal(side)
        else:
            q, steps = square_area_error_replay(side, model)
        results.append(q)
        trace.extend(str(s) for s in steps)
    return Rows(tuple(results)), trace


def _capacity_inputs(f):
    system = f["system"]
    return {
        "heads": parse_literal(f["heads"]),
        "per-head": parse_quantity(f["per-head"], system),
        "system": system,
    }


def _capacity_compute(inp, model, form):
    total = capacity_total(inp["heads"], inp["per-head"], form)
    return total, [f"{inp['heads']} × {inp['per-head']} = {total}"]


def _donkey_inputs(f):
    unit = f["big-unit"].strip()
    if unit not in _DONKEY_SYSTEMS:
        raise SexagesimalError(f"big-unit must be one of {', '.join(_DONKEY_SYSTEMS)}")
    return {"heads": parse_literal(f["heads"]), "big-unit": unit}


_DONKEY_SYSTEMS = {"gur": "capacity-gur", "líd-ga": "capacity-lidga", "lidga": "capacity-lidga"}


def _donkey_compute(inp, model, form):
    q = donkey_ration(inp["heads"], inp["big-unit"], form)
    divisor = 5 if q.system == "capacity-gur" else 4
    return q, [f"{inp['heads']} ÷ {divisor} = {q}"]


def _quantity_recorded(system_of: Callable[[dict[str, Any]], str | None]):
    def parse(text, inp):
        return parse_quantity(text, system_of(inp))

    return parse


KINDS: dict[str, Kind] = {
    k.name: k
    for k in (
        Kind("mul", ("a", "b"), (), lambda f: {"a": parse_literal(f["a"]), "b": parse_literal(f["b"])},
             lambda t, i: parse_literal(t), _mul_compute),
        Kind("granary-div", ("stock", "per-head"), (), _granary_inputs, _granary_recorded,
             _granary_compute),
        Kind("square-area", ("side",), (), _square_inputs, _square_recorded, _square_compute,
             error_models=True),
        Kind("capacity-total", ("heads", "per-head", "system"), (), _capacity_inputs,
             _quantity_recorded(lambda i: i["system"]), _capacity_compute),
        Kind("donkey-ration", ("heads", "big-unit"), (), _donkey_inputs,
             _quantity_recorded(lambda i: _DONKEY_SYSTEMS[i["big-unit"]]),
             _donkey_compute),
    )
}

COMMON_KEYS = ("id", "kind", "recorded", "expected", "recorded-form", "error-model", "comment")


# -- parsing -------------------------------------------------------------


def _blocks(text: str) -> Iterable[list[tuple[int, str]]]:
    block: list[tuple[int, str]] = []
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip() if not raw.lstrip().startswith("#") else ""
        if raw.strip() == "":
            if block:
                yield block
                block = []
            continue
        if line.strip():
            block.append((n, line))
    if block:
        yield block


def _column(raw: str, exc: Exception, value_start: int) -> int:
    if isinstance(exc, LiteralError) and exc.text:
        at = raw.find(exc.text, value_start)
        if at >= 0:
            return at + (exc.position or 0) + 1
    return value_start + 1


def _parse_block(block: list[tuple[int, str]]) -> TabletRecord:
    fields: dict[str, str] = {}
    where: dict[str, tuple[int, str, int]] = {}
    first = block[0][0]
    for n, raw in block:
        key, sep, value = raw.partition(":")
        if not sep:
            raise CorpusError(f"expected 'key: value', got {raw.strip()!r}", n)
        key = key.strip()
        if key in fields:
            raise CorpusError(f"duplicate key {key!r}", n)
        start = len(key) + 1 + (len(value) - len(value.lstrip()))
        start += len(raw) - len(raw.lstrip())
        fields[key] = value.strip()
        where[key] = (n, raw, start)

    def need(key: str) -> str:
        if key not in fields or not fields[key]:
            raise CorpusError(f"missing field {key!r}", first)
        return fields[key]

    ident = need("id")
    kind_name = need("kind")
    if kind_name not in KINDS:
        n, raw, start = where["kind"]
        raise CorpusError(f"unknown kind {kind_name!r}; expected one of {', '.join(KINDS)}", n, start + 1)
    kind = KINDS[kind_name]
    for key in kind.required:
        need(key)
    need("recorded")
    for key in fields:
        if key not in COMMON_KEYS and key not in kind.required + kind.optional:
            n, _, _ = where[key]
            raise CorpusError(f"unexpected key {key!r} for kind {kind_name}", n)

    def guarded(keys: Iterable[str], fn: Callable[[], Any]) -> Any:
        try:
            return fn()
        except SexagesimalError as exc:
            for key in keys:
                n, raw, start = where.get(key, (first, "", 0))
                if isinstance(exc, LiteralError) and exc.text and exc.text in raw:
                    raise CorpusError(str(exc), n, _column(raw, exc, start)) from None
            key = next(iter(keys))
            n, raw, start = where.get(key, (first, "", 0))
            raise CorpusError(str(exc), n, start + 1) from None

    inputs = guarded(kind.required, lambda: kind.parse_inputs(fields))
    recorded = guarded(["recorded"], lambda: kind.parse_recorded(fields["recorded"], inputs))

    expected = fields.get("expected", CORRECT)
    if expected not in (CORRECT, SCRIBAL_ERROR):
        raise CorpusError(f"expected must be {CORRECT} or {SCRIBAL_ERROR}", where["expected"][0])
    form = fields.get("recorded-form")
    if form is not None and form not in ("additive", "subtractive"):
        raise CorpusError("recorded-form must be additive or subtractive", where["recorded-form"][0])
    model = None
    if "error-model" in fields:
        if not kind.error_models:
            raise CorpusError(f"kind {kind_name} takes no error model", where["error-model"][0])
        model = guarded(["error-model"], lambda: parse_error_model(fields["error-model"]))
    if expected == SCRIBAL_ERROR and model is None:
        raise CorpusError("a scribal-error record needs an error-model", first)
    return TabletRecord(
        id=ident,
        kind=kind_name,
        inputs=inputs,
        recorded=recorded,
        recorded_form=form,
        error_model=model,
        expected=expected,
        comment=fields.get("comment", ""),
        line=first,
        fields=fields,
    )


def parse_corpus(text: str) -> list[TabletRecord]:
    records = [_parse_block(b) for b in _blocks(text)]
    seen: dict[str, int] = {}
    for r in records:
        if r.id in seen:
            raise CorpusError(f"duplicate id {r.id!r} (first at line {seen[r.id]})", r.line)
        seen[r.id] = r.line
    return records


def bundled_corpus_text() -> str:
    return resources.files("fara").joinpath("data/corpus.tab").read_text(encoding="utf-8")


def load_bundled() -> list[TabletRecord]:
    return parse_corpus(bundled_corpus_text())


# -- verification ----------------------------------------------------------


def _agrees(computed, record: TabletRecord) -> bool:
    if _value_key(computed) != _value_key(record.recorded):
        return False
    if record.recorded_form is not None:
        want = record.recorded_form
        return all(f == want for f in _forms(computed) + _forms(record.recorded))
    return True


def verify_record(r: TabletRecord) -> Verdict:
    """Replay one record and classify it.

    The clean computation always runs.  A ``correct`` record matches when the
    clean result equals the recorded one; a ``scribal-error`` record is
    reproduced when the replay under its error model equals the recorded
    result while the clean computation does not.
    """
    kind = KINDS[r.kind]
    form = SUBTRACTIVE_IF_SHORTER if r.recorded_form == "subtractive" else ADDITIVE
    recorded = str(r.recorded)
    try:
        clean, clean_trace = kind.compute(r.inputs, None, form)
        if r.expected == CORRECT:
            ok = _agrees(clean, r)
            return Verdict(
                r.id,
                MATCH if ok else MISMATCH,
                str(clean),
                recorded,
                tuple(clean_trace),
                "" if ok else "clean computation differs from the recorded result",
            )
        replay, replay_trace = kind.compute(r.inputs, r.error_model, form)
        if _agrees(replay, r) and not _agrees(clean, r):
            return Verdict(r.id, ERROR_REPRODUCED, str(replay), recorded, tuple(replay_trace),
                           f"clean result {clean}")
        detail = (
            "the clean computation already agrees; no error to reproduce"
            if _agrees(clean, r)
            else f"replay under {r.error_model} gives {replay}"
        )
        return Verdict(r.id, MISMATCH, str(replay), recorded, tuple(replay_trace), detail)
    except SexagesimalError as exc:
        return Verdict(r.id, MISMATCH, "", recorded, None, f"computation failed: {exc}")


@dataclass(frozen=True)
class Report:
    verdicts: tuple[Verdict, ...]

    @property
    def counts(self) -> dict[str, int]:
        c = Counter(v.status for v in self.verdicts)
        return {s: c.get(s, 0) for s in STATUSES}

    @property
    def exit_status(self) -> int:
        return 1 if self.counts[MISMATCH] else 0


def verify_all(records: Iterable[TabletRecord], jobs: int = 1) -> Report:
    """Verify every record; the report keeps input order."""
    records = list(records)
    if jobs > 1 and len(records) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = tuple(pool.map(verify_record, records))
    else:
        verdicts = tuple(verify_record(r) for r in records)
    return Report(verdicts)


def format_report(report: Report, traces: bool = False) -> str:
    rows = [(v.id, v.status, v.computed, v.recorded) for v in report.verdicts]
    header = ("id", "status", "computed", "recorded")
    widths = [max([len(header[i])] + [len(r[i]) for r in rows]) for i in range(3)]
    lines = []
    for i, row in enumerate([header] + rows):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row[:3], widths)) + "  " + row[3])
        if i and traces and report.verdicts[i - 1].trace:
            lines.extend("    " + t for t in report.verdicts[i - 1].trace)
        if i and report.verdicts[i - 1].status == MISMATCH and report.verdicts[i - 1].detail:
            lines.append("    ! " + report.verdicts[i - 1].detail)
    c = report.counts
    lines.append(
        f"{len(report.verdicts)} records: {c[MATCH]} match, "
        f"{c[ERROR_REPRODUCED]} error-reproduced, {c[MISMATCH]} mismatch"
    )
    return "\n".join(line.rstrip() for line in lines)


def format_machine(report: Report) -> str:
    return "\n".join(f"{v.id}\t{v.status}\t{v.computed}\t{v.recorded}" for v in report.verdicts)


__all__ = [
    "CorpusError",
    "TabletRecord",
    "Verdict",
    "Report",
    "KINDS",
    "parse_corpus",
    "load_bundled",
    "bundled_corpus_text",
    "verify_record",
    "verify_all",
    "format_report",
    "format_machine",
]

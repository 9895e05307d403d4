"""Acceptance criteria, one check per criterion.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.  Time limits
use the best of a few warm runs so that one scheduler hiccup does not fail a
sub-millisecond budget.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fara import corpus, kernels, metrology, numerals, rations, regnum  # noqa: E402
from fara.expr import evaluate  # noqa: E402
from fara.sexcore import (  # noqa: E402
    SexValue,
    add,
    divmod_int,
    format_literal,
    mul,
    parse_literal as L,
    pow_int,
    round_to_multiple,
    sub,
)
from oracles import is_regular_brute, literal_value  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}


def best_time(fn, repeat: int = 5) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def once(fn):
    t = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t


def c1():
    got = str(evaluate("14 × 11,30")[0])
    t = best_time(lambda: evaluate("14 × 11,30"))
    return got == "2,41,0" and t < 1e-3, f"14 × 11,30 = {got} in {t * 1e3:.3f} ms (limit 1 ms)"


def c2():
    stock = metrology.parse_quantity("1 gur₇")
    r = rations.granary_division(stock, 7)
    t = best_time(lambda: rations.granary_division(stock, 7))
    ok = stock.value == L("5,20,0,0") and (str(r.heads), str(r.remainder)) == ("45,42,51", "3")
    return ok and t < 1e-3, f"{r.heads} men, {r.remainder} sìla repaid in {t * 1e3:.3f} ms (limit 1 ms)"


def c3():
    p = pow_int(L("1;20"), 7)
    r = round_to_multiple(p, L("0;30"))
    ok = str(p) == "7;29,29,32,50,22,13,20" and p.to_fraction() == Fraction(4, 3) ** 7 and str(r) == "7;30"
    return ok, f"(1;20)^7 = {p}, rounded to 0;30 = {r}"


def c4():
    def check():
        bad = []
        for n in range(1, 10_001):
            reg = regnum.is_regular(n)
            if reg != is_regular_brute(n):
                bad.append(n)
            elif reg and SexValue.from_int(n) * regnum.reciprocal(n) != 1:
                bad.append(n)
        return bad

    bad, t = once(check)
    r18 = str(regnum.reciprocal(18))
    ok = r18 == "0;3,20" and not bad and t < 5
    return ok, f"recip 18 = {r18}; {len(bad)} failures over n ≤ 10^4 in {t:.2f} s (limit 5 s)"


SF82 = [
    ("10,0", "3 šár 20 bùr"), ("9,0", "2 šár 42 bùr"), ("8,0", "2 šár 8 bùr"),
    ("7,0", "1 šár 38 bùr"), ("6,0", "1 šár 12 bùr"), ("5,0", "50 bùr"),
    ("4,0", "32 bùr"), ("3,0", "18 bùr"), ("2,0", "8 bùr"), ("1,0", "2 bùr"),
]


def c5():
    sides = [L(s) for s, _ in SF82]

    def run():
        return [str(metrology.square_area_scribal(s)[0]) for s in sides]

    got = run()
    t = best_time(run)
    hits = sum(g == w for g, (_, w) in zip(got, SF82))
    return hits == 10 and t < 10e-3, f"{hits}/10 rows in {t * 1e3:.2f} ms (limit 10 ms)"


def c6():
    clean, _ = metrology.square_area_scribal(L("50,0"))
    wrong, trace = metrology.square_area_error_replay(L("50,0"), "recip18=0;3,30 + via-15-square")
    values = [str(s.value) for s in trace]
    want = ["11,6,40", "38,53;20", "1,17,46;40", "9,43;20"]
    in_order = [v for v in values if v in want] == want
    ok = (
        str(clean) == "1 šár-gal 23 šár 20 bùr"
        and str(wrong) == "1 šár-gal 27 šár 30 bùr"
        and in_order
        and trace[-2].label == "sum"
        and values[-2] == "1,27,30"
    )
    return ok, f"clean {clean}; replay {wrong}; intermediates {'present' if in_order else 'missing'}"


def c7():
    a = rations.capacity_total(40, metrology.parse_quantity("2 bán", "capacity-lidga"))
    b = rations.capacity_total(7, metrology.parse_quantity("1 nigida", "capacity-gur"))
    ok = str(a) == "3 líd-ga 1 nigida 2 bán" and str(b) == "1 gur 2 nigida"
    return ok, f"40 × 2 bán = {a}; 7 nigida = {b}"


def c8():
    sub_form = metrology.SUBTRACTIVE_IF_SHORTER
    cases = [
        ("1,26", "gur", metrology.ADDITIVE, "17 gur 1 nigida"),
        ("6,23", "gur", metrology.ADDITIVE, "1,16 gur 3 nigida"),
        ("11", "líd-ga", sub_form, "2 líd-ga 3 nigida"),
        ("1,17", "líd-ga", sub_form, "20 líd-ga - 3 nigida"),
        ("42", "líd-ga", sub_form, "10 líd-ga 2 nigida"),
    ]
    got = [str(rations.donkey_ration(L(h), u, f)) for h, u, f, _ in cases]
    hits = sum(g == c[3] for g, c in zip(got, cases))
    return hits == len(cases), f"{hits}/{len(cases)} rations; 1,17 ÷ 4 → {got[3]}"


def c9():
    def check():
        bad = [n for n in range(1, 3601) if numerals.words_to_int(str(numerals.int_to_words(n))) != n]
        rng = random.Random(9)
        for _ in range(10_000):
            n = rng.randrange(1, 60**4)
            if numerals.words_to_int(str(numerals.int_to_words(n))) != n:
                bad.append(n)
        return bad

    bad, t = once(check)
    pinned = {9660: "šár-min géš-u-limmu géš", 70: "gešta-u", 600: "géš-u", 216000: "šár-gal"}
    pins = all(str(numerals.int_to_words(n)) == w and numerals.words_to_int(w) == n for n, w in pinned.items())
    return not bad and pins and t < 5, f"{len(bad)} roundtrip failures, pins {'ok' if pins else 'wrong'}, {t:.2f} s (limit 5 s)"


def _tamper_sweep() -> tuple[int, int]:
    lines = corpus.bundled_corpus_text().split("\n")
    tried = survived = 0
    for li, line in enumerate(lines):
        key, sep, _ = line.partition(":")
        if line.startswith("#") or not sep or key in ("id", "comment"):
            continue
        for ci in range(len(key) + 1, len(line)):
            if line[ci] not in "0123456789":
                continue
            for rep in "0123456789":
                if rep == line[ci]:
                    continue
                t = lines[:]
                t[li] = line[:ci] + rep + line[ci + 1 :]
                tried += 1
                try:
                    status = corpus.verify_all(corpus.parse_corpus("\n".join(t))).exit_status
                except corpus.CorpusError:
                    status = 2
                survived += status == 0
    return tried, survived


def c10():
    def run():
        return corpus.verify_all(corpus.load_bundled())

    first = run()
    t = best_time(run, repeat=3)
    again = run()
    erroneous = [v.id for v in first.verdicts if v.status == corpus.ERROR_REPRODUCED]
    tried, survived = _tamper_sweep()
    ok = (
        first.counts[corpus.MISMATCH] == 0
        and erroneous == ["TSŠ-188"]
        and first.exit_status == 0
        and first.verdicts == again.verdicts
        and survived == 0
        and t < 1
    )
    return ok, (
        f"{first.counts}; verify {t * 1e3:.1f} ms (limit 1 s); "
        f"{tried - survived}/{tried} single-digit tamperings flip the exit status"
    )


def c11():
    def check():
        rng = random.Random(11)
        bad = 0
        for _ in range(10_000):
            a = Fraction(rng.randrange(-(60**8), 60**8), 60 ** rng.randrange(5))
            b = Fraction(rng.randrange(-(60**8), 60**8), 60 ** rng.randrange(5))
            x, y = SexValue.from_fraction(a), SexValue.from_fraction(b)
            bad += add(x, y).to_fraction() != a + b
            bad += sub(x, y).to_fraction() != a - b
            bad += mul(x, y).to_fraction() != a * b
            n, d = rng.randrange(60**10), rng.randrange(1, 60**5)
            q, r = divmod_int(SexValue.from_int(n), SexValue.from_int(d))
            bad += (int(q), int(r)) != divmod(n, d)
            text = format_literal(x)
            bad += literal_value(text) != a or L(text) != x or format_literal(L(text)) != text
        return bad

    bad, t = once(check)
    return bad == 0 and t < 10, f"{bad} disagreements over 10^4 cases in {t:.2f} s (limit 10 s)"


CRITERIA = {
    1: ("WF No.2 multiplication", c1),
    2: ("TSŠ No.50 granary division", c2),
    3: ("Enmetena power and rounding", c3),
    4: ("reciprocals of regular numbers", c4),
    5: ("SF No.82 square fields", c5),
    6: ("TSŠ No.188 error replay", c6),
    7: ("TSŠ No.81 and No.882 totals", c7),
    8: ("plough-donkey rations", c8),
    9: ("numeral word roundtrip", c9),
    10: ("corpus gate", c10),
    11: ("rational oracle equivalence", c11),
}


def line_for(n: int) -> str:
    ok, detail = RESULTS[n]
    return f"{'PASS' if ok else 'FAIL'} [{n:2d}] {CRITERIA[n][0]}: {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = CRITERIA[n][1]()
    RESULTS[n] = (ok, detail)
    assert ok, detail


if __name__ == "__main__":
    print(f"kernel backend: {kernels.BACKEND}")
    for n in sorted(CRITERIA):
        RESULTS[n] = CRITERIA[n][1]()
        print(line_for(n))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)

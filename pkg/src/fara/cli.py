"""Command-line front end: ``fara <subcommand> ...``.

Numbers are read and printed in sexagesimal unless ``--decimal`` is given.
Exit status is 2 for usage and input errors, 1 for a verification mismatch
or an irregular divisor, 0 otherwise.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from fara import corpus, expr, metrology, numerals, rations, regnum
from fara.sexcore import SexagesimalError, SexValue, parse_literal


class UsageError(Exception):
    pass


def decimal_text(v: SexValue) -> str:
    """Exact decimal spelling; a fraction when the decimal would not terminate."""
    q = v.to_fraction()
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    scaled = abs(q.numerator) * 10**places // q.denominator
    whole, frac = divmod(scaled, 10**places)
    return f"{'-' if q < 0 else ''}{whole}.{frac:0{places}d}"


def _show(v: SexValue, args) -> str:
    return decimal_text(v) if args.decimal else str(v)


def _number(text: str, args) -> SexValue:
    if args.decimal:
        try:
            return SexValue.from_fraction(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"not a decimal number: {text!r}") from None
    return parse_literal(text)


def _whole(text: str, args) -> int:
    v = _number(text, args)
    if not v.is_integer():
        raise UsageError(f"{text!r} is not a whole number")
    return int(v)


def _input_lines(arg: str | None) -> list[str]:
    if arg is not None:
        return [arg]
    return [line for line in sys.stdin.read().splitlines() if line.strip()]


# -- subcommands -----------------------------------------------------------


def _calc_one(line: str, args) -> tuple[str, int]:
    try:
        value, rem = expr.evaluate(line, divmod_mode=args.divmod)
    except regnum.IrregularDivisorError as exc:
        return f"fara: {exc}; use --divmod for whole-number division", 1
    text = _show(value, args)
    if rem is not None:
        text += f" rem {_show(rem, args)}"
    return text, 0


def cmd_calc(args) -> int:
    if args.expression is None and sys.stdin.isatty():
        return _repl(args)
    status = 0
    for line in _input_lines(args.expression):
        try:
            out, code = _calc_one(line, args)
        except SexagesimalError as exc:
            out, code = f"fara: {exc}", 2
        (print(out) if code == 0 else print(out, file=sys.stderr))
        status = max(status, code)
    return status


def _repl(args) -> int:
    while True:
        try:
            line = input("fara> ")
        except EOFError:
            print()
            return 0
        if line.strip() in ("quit", "exit"):
            return 0
        if not line.strip():
            continue
        try:
            out, code = _calc_one(line, args)
        except SexagesimalError as exc:
            out, code = f"fara: {exc}", 2
        print(out, file=sys.stdout if code == 0 else sys.stderr)


def cmd_recip(args) -> int:
    n = _number(args.n, args)
    try:
        print(_show(regnum.inverse(n), args))
    except regnum.IrregularDivisorError as exc:
        w = regnum.strip_235(exc.n)
        print(
            f"fara: {exc.n} is irregular: 2^{w.alpha}·3^{w.beta}·5^{w.gamma}"
            f" × {_show(SexValue.from_int(w.residue), args)}",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_regular(args) -> int:
    w = regnum.strip_235(_number(args.n, args))
    head = "regular" if w.regular else "irregular"
    tail = f"2^{w.alpha}·3^{w.beta}·5^{w.gamma}"
    if not w.regular:
        tail += f" × {_show(SexValue.from_int(w.residue), args)}"
    print(f"{head}: {tail}")
    return 0


def cmd_words(args) -> int:
    if args.parse is not None or args.n is None:
        status = 0
        for line in _input_lines(args.parse):
            try:
                print(_show(SexValue.from_int(numerals.words_to_int(line)), args))
            except SexagesimalError as exc:
                print(f"fara: {exc}", file=sys.stderr)
                status = 2
        return status
    print(numerals.int_to_words(_whole(args.n, args)))
    return 0


def cmd_signs(args) -> int:
    print(numerals.format_signs(numerals.sign_decomposition(_whole(args.n, args), args.style)))
    return 0


def cmd_convert(args) -> int:
    q = _number(args.amount, args)
    print(_show(metrology.convert_exact(q, args.from_unit, args.to_unit, args.system), args))
    return 0


def cmd_square_area(args) -> int:
    side = _number(args.side, args)
    if args.error_model:
        result, trace = metrology.square_area_error_replay(side, args.error_model)
    else:
        result, trace = metrology.square_area_scribal(side, direct_division=args.direct)
    print(metrology.format_trace(trace) if args.trace else result)
    return 0


def cmd_ration(args) -> int:
    unit = "líd-ga" if args.unit in ("lidga", "líd-ga") else args.unit
    form = metrology.SUBTRACTIVE_IF_SHORTER if args.subtractive else metrology.ADDITIVE
    print(rations.donkey_ration(_whole(args.heads, args), unit, form))
    return 0


def _capacity(text: str, args):
    if len(text.split()) > 1:
        return metrology.parse_quantity(text, "capacity-granary")
    return _number(text, args)


def cmd_granary(args) -> int:
    r = rations.granary_division(_capacity(args.stock, args), _capacity(args.per_head, args))
    print(f"{_show(r.heads, args)} repaid {_show(r.remainder, args)} sìla")
    return 0


def cmd_verify(args) -> int:
    if args.file is None:
        text = corpus.bundled_corpus_text()
    elif args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    report = corpus.verify_all(corpus.parse_corpus(text), jobs=args.jobs)
    if args.machine:
        out = corpus.format_machine(report)
        if out:
            print(out)
    else:
        print(corpus.format_report(report, traces=args.trace))
    return report.exit_status


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--decimal", action="store_true", help="read and print numbers in decimal"
    )
    p = argparse.ArgumentParser(
        prog="fara", description="Exact sexagesimal arithmetic and Fara-period metrology."
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("calc", parents=[common], help="evaluate an expression")
    s.add_argument("expression", nargs="?", help="e.g. '14 * 11,30'; read from stdin if omitted")
    s.add_argument("--divmod", action="store_true", help="'/' is whole-number division")
    s.set_defaults(func=cmd_calc)

    s = sub.add_parser("recip", parents=[common], help="reciprocal of a regular number")
    s.add_argument("n")
    s.set_defaults(func=cmd_recip)

    s = sub.add_parser("regular", parents=[common], help="factor out 2, 3 and 5")
    s.add_argument("n")
    s.set_defaults(func=cmd_regular)

    s = sub.add_parser("words", parents=[common], help="Sumerian numeral words")
    s.add_argument("n", nargs="?")
    s.add_argument("--parse", metavar="PHRASE", help="phrase to turn into a number")
    s.set_defaults(func=cmd_words)

    s = sub.add_parser("signs", parents=[common], help="number-sign tally")
    s.add_argument("n")
    s.add_argument("--style", choices=numerals.STYLES, default="wedge")
    s.set_defaults(func=cmd_signs)

    s = sub.add_parser("convert", parents=[common], help="exact unit conversion")
    s.add_argument("amount")
    s.add_argument("from_unit", metavar="FROM")
    s.add_argument("to_unit", metavar="TO")
    s.add_argument("--system", choices=sorted(metrology.SYSTEMS), default=None)
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("square-area", parents=[common], help="area of a square field")
    s.add_argument("side", help="side in ninda")
    s.add_argument(
        "--error-model",
        action="append",
        metavar="MODEL",
        help="recip18[=0;3,30] or via-15-square; repeatable",
    )
    s.add_argument("--trace", action="store_true", help="print every step")
    s.add_argument("--direct", action="store_true", help="divide by 18 directly when exact")
    s.set_defaults(func=cmd_square_area)

    s = sub.add_parser("ration", parents=[common], help="barley for plough donkeys")
    s.add_argument("heads")
    s.add_argument("--unit", choices=("gur", "lidga", "líd-ga"), required=True)
    s.add_argument("--subtractive", action="store_true", help="allow 'X big - k nigida'")
    s.set_defaults(func=cmd_ration)

    s = sub.add_parser("granary", parents=[common], help="divide a stock among people")
    s.add_argument("stock", help="sìla, or a quantity such as '1 gur₇'")
    s.add_argument("per_head", metavar="PER-HEAD", help="sìla per person")
    s.set_defaults(func=cmd_granary)

    s = sub.add_parser("verify", help="replay a tablet corpus")
    s.add_argument("file", nargs="?", help="corpus file, '-' for stdin; bundled corpus if omitted")
    s.add_argument("--machine", action="store_true", help="id<TAB>status<TAB>computed<TAB>recorded")
    s.add_argument("--trace", action="store_true", help="show each record's steps")
    s.add_argument("--jobs", type=int, default=1, help="verify records in parallel")
    s.set_defaults(func=cmd_verify, decimal=False)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except regnum.IrregularDivisorError as exc:
        print(f"fara: {exc}", file=sys.stderr)
        return 1
    except (SexagesimalError, UsageError) as exc:
        print(f"fara: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

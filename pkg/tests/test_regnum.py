from fractions import Fraction

import pytest

from fara.regnum import (
    IrregularDivisorError,
    divide,
    expansion_bound,
    inverse,
    is_regular,
    reciprocal,
    reciprocal_table,
    regular_numbers,
    strip_235,
)
from fara.sexcore import SexagesimalError, SexValue, parse_literal
from oracles import is_regular_brute, sexagesimal_places

N = 10_000


@pytest.mark.parametrize(
    "n, recip",
    [(2, "0;30"), (3, "0;20"), (8, "0;7,30"), (18, "0;3,20"), (27, "0;2,13,20"), (81, "0;0,44,26,40"), (1, "1")],
)
def test_standard_reciprocals(n, recip):
    assert str(reciprocal(n)) == recip


def test_regularity_matches_brute_force():
    for n in range(1, N + 1):
        assert is_regular(n) == is_regular_brute(n), n


def test_every_regular_reciprocal_is_exact():
    for n in regular_numbers(N):
        r = reciprocal(n)
        assert (SexValue.from_int(n) * r) == 1
        assert r.to_fraction() == Fraction(1, n)
        assert -r.point_exp == expansion_bound(strip_235(n)) == sexagesimal_places(Fraction(1, n))


def test_regular_numbers_sequence():
    got = regular_numbers(100)
    want = [n for n in range(1, 101) if is_regular_brute(n)]
    assert got == want
    assert regular_numbers(0) == []


def test_witness():
    w = strip_235(2 * 2 * 3 * 5 * 5 * 5 * 7)
    assert (w.alpha, w.beta, w.gamma, w.residue, w.regular) == (2, 1, 3, 7, False)
    assert strip_235(parse_literal("1,0")).regular


@pytest.mark.parametrize("n", [7, 11, 13, 14, 77, 59, 61])
def test_irregular_divisor_is_reported(n):
    with pytest.raises(IrregularDivisorError) as ei:
        reciprocal(n)
    assert ei.value.n == n
    assert isinstance(ei.value, SexagesimalError)


def test_inverse_and_divide():
    assert str(inverse(parse_literal("1;20"))) == "0;45"
    assert str(inverse(parse_literal("0;3,20"))) == "18"
    assert str(divide(parse_literal("1,0"), 18)) == "3;20"
    assert str(divide(parse_literal("7;30"), parse_literal("0;30"))) == "15"
    with pytest.raises(IrregularDivisorError):
        divide(parse_literal("2,41,0"), parse_literal("11,30"))
    with pytest.raises(IrregularDivisorError):
        divide(1, 7)
    with pytest.raises(ZeroDivisionError):
        inverse(0)


def test_reciprocal_rejects_non_integers():
    with pytest.raises(SexagesimalError):
        reciprocal(parse_literal("1;30"))
    with pytest.raises(SexagesimalError):
        reciprocal(-4)


def test_reciprocal_table():
    table = reciprocal_table(81)
    rows = {int(n): str(r) for n, r in table}
    assert rows[2] == "0;30" and rows[45] == "0;1,20" and rows[81] == "0;0,44,26,40"
    assert [int(n) for n, _ in table] == regular_numbers(81)

import random

import pytest

from fara import corpus
from fara.corpus import (
    CorpusError,
    ERROR_REPRODUCED,
    MATCH,
    MISMATCH,
    format_machine,
    format_report,
    load_bundled,
    parse_corpus,
    verify_all,
)

IDS = ["WF-2", "TSŠ-50", "SF-82", "TSŠ-188", "TSŠ-81", "TSŠ-882", "WF-1", "WF-7", "WF-14", "TSŠ-115", "NTSŠ-211"]


def bundled_lines():
    return corpus.bundled_corpus_text().split("\n")


def tamper_sites():
    """(line index, column) of every ASCII digit in a value that is not an id or comment."""
    for li, line in enumerate(bundled_lines()):
        key, sep, _ = line.partition(":")
        if line.startswith("#") or not sep or key in ("id", "comment"):
            continue
        for ci in range(len(key) + 1, len(line)):
            if line[ci] in "0123456789":
                yield li, ci


def status_of(text: str) -> int:
    try:
        return verify_all(parse_corpus(text)).exit_status
    except CorpusError:
        return 2


def test_bundled_corpus_verifies():
    records = load_bundled()
    assert [r.id for r in records] == IDS
    report = verify_all(records)
    assert report.counts == {MATCH: 10, ERROR_REPRODUCED: 1, MISMATCH: 0}
    assert [v.id for v in report.verdicts if v.status == ERROR_REPRODUCED] == ["TSŠ-188"]
    assert report.exit_status == 0


def test_every_single_digit_tampering_is_caught():
    lines = bundled_lines()
    sites = list(tamper_sites())
    assert len(sites) > 100
    for li, ci in sites:
        line = lines[li]
        for rep in "0123456789":
            if rep == line[ci]:
                continue
            t = lines[:]
            t[li] = line[:ci] + rep + line[ci + 1 :]
            assert status_of("\n".join(t)) != 0, (line, ci, rep)


def test_tampered_recorded_value_is_a_mismatch():
    text = corpus.bundled_corpus_text().replace("recorded: 2,41,0", "recorded: 2,41,1")
    report = verify_all(parse_corpus(text))
    bad = [v for v in report.verdicts if v.status == MISMATCH]
    assert [v.id for v in bad] == ["WF-2"]
    assert bad[0].computed == "2,41,0" and bad[0].recorded == "2,41,1"
    assert report.exit_status == 1


def test_scribal_error_that_is_not_reproduced_is_a_mismatch():
    text = corpus.bundled_corpus_text().replace(
        "error-model: recip18=0;3,30 + via-15-square", "error-model: via-15-square"
    )
    verdict = {v.id: v for v in verify_all(parse_corpus(text)).verdicts}["TSŠ-188"]
    assert verdict.status == MISMATCH


def test_correct_record_claimed_as_error_is_a_mismatch():
    text = "id: X\nkind: mul\na: 14\nb: 11,30\nrecorded: 2,41,0\nerror-model: recip18\nexpected: scribal-error\n"
    with pytest.raises(CorpusError):  # mul has no error models
        parse_corpus(text)


def test_empty_inputs():
    assert parse_corpus("") == []
    assert parse_corpus("# nothing\n\n\n") == []
    report = verify_all([])
    assert report.exit_status == 0
    assert format_machine(report) == ""


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("id: X\nkind: mul\na: 61\nb: 2\nrecorded: 2,2\n", 3, 4),
        ("id: X\nkind: mul\na: 1,61\nb: 2\nrecorded: 2,2\n", 3, 6),
        ("id: X\nkind: foo\n", 2, 7),
        ("id: X\nkind: mul\na: 1\n", 1, 1),
        ("id: X\nkind: mul\na: 1\nb: 2\nrecorded: 2\nzzz: 1\n", 6, 1),
        ("id: X\nkind: mul\na: 1\nb: 2\nrecorded: 2\n\nid: X\nkind: mul\na: 1\nb: 2\nrecorded: 2\n", 7, 1),
        ("just text\n", 1, 1),
    ],
)
def test_parse_errors_carry_positions(text, line, column):
    with pytest.raises(CorpusError) as ei:
        parse_corpus(text)
    assert (ei.value.line, ei.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(ei.value)


def test_parallel_verification_keeps_order():
    records = load_bundled() * 4
    random.Random(1).shuffle(records)
    serial = verify_all(records)
    for jobs in (2, 8):
        assert verify_all(records, jobs=jobs).verdicts == serial.verdicts


def test_machine_format():
    lines = format_machine(verify_all(load_bundled())).split("\n")
    assert len(lines) == 11
    assert lines[0] == "WF-2\tmatch\t2,41,0\t2,41,0"
    assert lines[3].startswith("TSŠ-188\terror-reproduced\t")
    assert all(len(line.split("\t")) == 4 for line in lines)


def test_human_report():
    out = format_report(verify_all(load_bundled()), traces=True)
    assert out.splitlines()[-1] == "11 records: 10 match, 1 error-reproduced, 0 mismatch"
    assert "× 0;3,30 (for 1/18): 38,53;20 bùr×2;15" in out

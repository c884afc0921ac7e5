from __future__ import annotations

import pytest

from cubefactor.oeis import (
    BFileError,
    FetchError,
    SequenceRecord,
    best_match,
    compare,
    fetch_bfile,
    parse_bfile,
    render_bfile,
    scan_shifts,
)
from cubefactor.sequences import fib, lucas_triangle_row, padovan


def a000931_fixture(count: int = 140) -> list[int]:
    # independent seed a(0)=1, a(1)=a(2)=0, then the same recurrence
    terms = [1, 0, 0]
    while len(terms) < count:
        terms.append(terms[-2] + terms[-3])
    return terms[:count]


# Lucas triangle read by rows, frozen from the first six tabulated rows
A029635_HEAD = [2, 1, 2, 1, 3, 2, 1, 4, 5, 2, 1, 5, 9, 7, 2, 1, 6, 14, 16, 9, 2]


def test_parse_basic():
    record = parse_bfile("0 1\n1 2\n")
    assert record.offset == 0 and record.terms == (1, 2)


def test_parse_with_comment_and_nonzero_offset():
    record = parse_bfile("# comment\n5 8\n6 13\n")
    assert record.offset == 5 and record.terms == (8, 13)


def test_parse_gap_and_malformed_lines():
    with pytest.raises(BFileError, match="gap"):
        parse_bfile("0 1\n2 3\n")
    with pytest.raises(BFileError, match="line 2"):
        parse_bfile("0 1\n1 2 3\n")
    with pytest.raises(BFileError, match="line 1"):
        parse_bfile("zero one\n")
    with pytest.raises(BFileError):
        parse_bfile("# nothing but comments\n")


def test_render_parse_round_trip():
    record = SequenceRecord("A000045", 0, tuple(fib(n) for n in range(30)))
    assert parse_bfile(render_bfile(record), id="A000045") == record


def test_compare_identity_and_empty_overlap():
    record = SequenceRecord(None, 0, tuple(fib(n) for n in range(30)))
    report = compare([fib(n) for n in range(30)], 0, record, 0)
    assert report.matched and report.overlap == 30
    with pytest.raises(ValueError):
        compare([1, 2, 3], 0, record, 100)


def test_compare_reports_first_mismatch():
    record = SequenceRecord(None, 0, (1, 2, 3, 5, 8))
    report = compare([1, 2, 4, 5], 0, record, 0)
    assert not report.matched
    assert report.first_mismatch == (2, 4, 3)


def test_compare_overlap_symmetric_under_shift_negation():
    a = [padovan(n) for n in range(25)]
    b = [fib(n) for n in range(18)]
    record_a = SequenceRecord(None, 0, tuple(a))
    record_b = SequenceRecord(None, 4, tuple(b))
    for shift in range(-6, 7):
        try:
            forward = compare(a, 0, record_b, shift)
        except ValueError:
            with pytest.raises(ValueError):
                compare(b, 4, record_a, -shift)
            continue
        backward = compare(b, 4, record_a, -shift)
        assert forward.overlap == backward.overlap


def test_padovan_shift_scan_discovers_the_offset():
    record = SequenceRecord("A000931", 0, tuple(a000931_fixture()))
    local = [padovan(n) for n in range(120)]
    reports = scan_shifts(local, 0, record)
    best = best_match(reports)
    assert best is not None
    assert best.shift == 5
    assert best.overlap == 120
    # and it is the only fully matching shift in the window
    assert [r.shift for r in reports if r.matched] == [5]


def test_lucas_triangle_rows_match_the_tabulated_bfile_head():
    flattened: list[int] = []
    n = 0
    while len(flattened) < len(A029635_HEAD):
        flattened.extend(lucas_triangle_row(n))
        n += 1
    record = SequenceRecord("A029635", 0, tuple(A029635_HEAD))
    report = compare(flattened[: len(A029635_HEAD)], 0, record, 0)
    assert report.matched and report.overlap == len(A029635_HEAD)


def test_fetch_offline_cold_cache_errors(tmp_path):
    with pytest.raises(FetchError):
        fetch_bfile("A000931", offline=True, cache=tmp_path)


def test_fetch_served_from_cache_without_network(tmp_path):
    lines = "".join(f"{i} {t}\n" for i, t in enumerate(a000931_fixture(50)))
    (tmp_path / "A000931.txt").write_text(lines, encoding="utf-8")
    record = fetch_bfile("A000931", offline=True, cache=tmp_path)
    assert record.id == "A000931"
    assert record.offset == 0
    assert len(record.terms) == 50


def test_fetch_normalizes_ids(tmp_path):
    (tmp_path / "A000045.txt").write_text("0 0\n1 1\n2 1\n", encoding="utf-8")
    assert fetch_bfile("45", offline=True, cache=tmp_path).terms == (0, 1, 1)
    with pytest.raises(ValueError):
        fetch_bfile("A12345678", offline=True, cache=tmp_path)


def test_cache_env_variable_is_honoured(tmp_path, monkeypatch):
    monkeypatch.setenv("CUBEFACTOR_CACHE", str(tmp_path))
    (tmp_path / "A000032.txt").write_text("0 2\n1 1\n2 3\n", encoding="utf-8")
    record = fetch_bfile("A000032", offline=True)
    assert record.terms == (2, 1, 3)

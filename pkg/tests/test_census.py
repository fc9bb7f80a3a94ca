import pytest

from platslide.census import (
    CENSUS_ENV,
    CensusError,
    check_row,
    default_census_path,
    load_census,
    parse_census_line,
    token_diff,
)
from platslide.tuple_core import SixTuple
from platslide.words import Word

SMALLEST = (
    "3|3|3|2|2|2|ar^-1 br al^-1 bl^-1 al^-1 ar^-1|al bl br^-1 ar^-1 br al^-1 ar^-1"
    "|al bl ar br^-1 al bl br^-1 ar^-1 br"
)


def test_bundled_fixture_shape(census_rows):
    assert len(census_rows) == 78
    codes = {r.code for r in census_rows}
    assert len(codes) == len(census_rows)
    for t in [(3, 3, 3, 2, 2, 2), (4, 6, 10, 1, 1, 1), (6, 6, 6, 1, 7, 7), (4, 4, 4, 3, 3, 3)]:
        assert SixTuple(*t) in codes
    for r in census_rows:
        assert len(r.words) == 3
        for w in r.words:
            Word.parse(w).validate()


def test_parse_line_forms():
    row = parse_census_line(SMALLEST, 7)
    assert row.code == SixTuple(3, 3, 3, 2, 2, 2) and row.line == 7
    alt = parse_census_line("3 3 3 2 2 2|" + SMALLEST.split("|", 6)[6])
    assert alt.words == row.words
    assert parse_census_line("   ") is None
    assert parse_census_line("# header") is None
    with pytest.raises(CensusError):
        parse_census_line("3|3|3|2|2|2|al|ar")
    with pytest.raises(CensusError):
        parse_census_line(SMALLEST.replace("ar^-1 br", "zz"))


def test_env_var_overrides_path(monkeypatch, tmp_path):
    target = tmp_path / "rows.txt"
    monkeypatch.setenv(CENSUS_ENV, str(target))
    assert default_census_path() == target
    monkeypatch.delenv(CENSUS_ENV)
    assert default_census_path().name == "census.txt"


def test_check_row_ok_and_mismatch():
    row = parse_census_line(SMALLEST)
    assert check_row(row).ok
    bad = parse_census_line(SMALLEST.replace("bl^-1 al^-1", "bl al^-1", 1))
    report = check_row(bad)
    assert report.status == "mismatch"
    assert any("table" in d and "bl^-1" in d for d in report.diff)


def test_strict_order_compares_sequence():
    row = parse_census_line(SMALLEST)
    computed = check_row(row).computed
    ordered = parse_census_line("3|3|3|2|2|2|" + "|".join(computed))
    assert check_row(ordered, strict_order=True).ok
    rev = parse_census_line("3|3|3|2|2|2|" + "|".join(reversed(computed)))
    assert check_row(rev).ok
    assert check_row(rev, strict_order=True).status == "mismatch"


def test_invalid_rows_are_reported():
    row = parse_census_line("3|4|3|2|2|2|al|al|al")
    assert check_row(row).status == "invalid-conditions"
    row = parse_census_line("1|1|3|0|0|0|al|al|al")
    assert check_row(row).status == "inadmissible"


def test_token_diff():
    assert token_diff("al bl", "al bl") == []
    assert token_diff("al bl ar", "al br ar") == ["replace at token 1: table [bl] computed [br]"]


def test_empty_fixture(tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("# nothing\n\n")
    assert load_census(p) == []

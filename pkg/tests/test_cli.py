import json
import subprocess
import sys

import pytest

from platslide.census import CENSUS_ENV
from platslide.cli import canonical_json, main, run_tuple

from helpers import INADMISSIBLE

SMALLEST_WORDS = [
    "ar^-1 br al^-1 bl^-1 al^-1 ar^-1",
    "al bl ar br^-1 al bl br^-1 ar^-1 br",
    "al bl br^-1 ar^-1 br al^-1 ar^-1",
]
INADMISSIBLE_ARGS = [str(x) for x in INADMISSIBLE]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "3", "3", "3", "2", "2", "2")
    assert code == 0
    assert sorted(out.splitlines()) == sorted(SMALLEST_WORDS)


def test_compute_json_round_trips(capsys):
    code, out, _ = run(capsys, "compute", "--format", "json", "6", "6", "6", "1", "7", "7")
    assert code == 0
    obj = json.loads(out)
    assert obj["case"] == 4
    assert obj["params"] == {"a": 6, "b": 5, "c": 1, "d": 1}
    assert obj["tuple"] == [6, 6, 6, 1, 7, 7]
    assert len(obj["words"]) == 3
    assert canonical_json(obj) + "\n" == out
    assert "." not in out.replace("^-1", "")  # integers only


def test_error_json_round_trips(capsys):
    code, out, _ = run(capsys, "compute", "--format", "json", "3", "4", "3", "2", "2", "2")
    assert code == 2
    obj = json.loads(out)
    assert obj["violated"] == [1, 4] and obj["exit"] == 2
    assert canonical_json(obj) + "\n" == out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["compute", "3", "4", "3", "2", "2", "2"], 2),
        (["compute", "3", "3", "3", "2", "2"], 1),
        (["compute", "3", "3", "3", "2", "2", "x"], 1),
        (["compute"], 1),
        (["compute", *INADMISSIBLE_ARGS], 3),
        (["compute", "0", "8", "2", "1", "1", "5"], 3),  # no front labels on one handle
        (["frobnicate"], 1),
        (["census", "/no/such/file"], 1),
        (["batch", "/no/such/file"], 1),
        (["--help"], 0),
        (["--version"], 0),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_condition_message_lists_indices(capsys):
    _, _, err = run(capsys, "compute", "3", "4", "3", "2", "2", "2")
    assert "[1, 4]" in err


def test_dump_edges(capsys):
    code, out, err = run(capsys, "compute", "--dump-edges", "3", "3", "3", "2", "2", "2")
    assert code == 0 and len(out.splitlines()) == 3
    assert "(0,0) -2-> (1,5)" in err.splitlines()


def _fixture(tmp_path, text):
    p = tmp_path / "rows.txt"
    p.write_text(text)
    return str(p)


SMALLEST_ROW = "3|3|3|2|2|2|" + "|".join(SMALLEST_WORDS) + "\n"


def test_census_ok(capsys, tmp_path):
    code, out, _ = run(capsys, "census", _fixture(tmp_path, "# h\n" + SMALLEST_ROW))
    assert code == 0
    assert out.splitlines()[-1] == "1/1 rows match"


def test_census_corrupted_letter(capsys, tmp_path):
    bad = SMALLEST_ROW.replace("al bl ar br^-1", "al bl ar^-1 br^-1", 1)
    code, out, _ = run(capsys, "census", _fixture(tmp_path, bad))
    assert code == 4
    assert out.count("mismatch") == 1
    assert "table [ar^-1] computed [ar]" in out


def test_census_empty_fixture(capsys, tmp_path):
    code, out, err = run(capsys, "census", _fixture(tmp_path, ""))
    assert code == 0
    assert "warning" in err
    assert out.splitlines()[-1] == "0/0 rows match"


def test_census_env_override(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(CENSUS_ENV, _fixture(tmp_path, SMALLEST_ROW))
    code, out, _ = run(capsys, "census", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["total"] == obj["matched"] == 1
    assert canonical_json(obj) + "\n" == out


def test_census_strict_order(capsys, tmp_path):
    rev = "3|3|3|2|2|2|" + "|".join(reversed(run_tuple("3 3 3 2 2 2").out.split("\n")[:3])) + "\n"
    path = _fixture(tmp_path, rev)
    assert run(capsys, "census", path)[0] == 0
    assert run(capsys, "census", "--strict-order", path)[0] == 4


def test_census_malformed_fixture(capsys, tmp_path):
    assert run(capsys, "census", _fixture(tmp_path, "3|3|3\n"))[0] == 1


BATCH = """# mixed batch
3 3 3 2 2 2
4 6 10 1 1 1   # running example
3 4 3 2 2 2
6,6,6,1,7,7

(5,5,5,2,2,2)
"""


@pytest.mark.parametrize("fmt", ["text", "json"])
@pytest.mark.parametrize("jobs", ["1", "3"])
def test_batch_equals_sequential_runs(capsys, tmp_path, fmt, jobs):
    path = _fixture(tmp_path, BATCH)
    code, out, err = run(capsys, "batch", "--jobs", jobs, "--format", fmt, path)
    expected_out, expected_err, codes = "", "", []
    for line in BATCH.splitlines():
        text = line.split("#")[0].strip()
        if not text:
            continue
        c, o, e = run(capsys, "compute", "--format", fmt, *text.replace(",", " ").strip("()").split())
        expected_out += o
        expected_err += e
        codes.append(c)
    assert out == expected_out
    assert err == expected_err
    assert code == max(codes) == 2


def test_batch_empty(capsys, tmp_path):
    assert run(capsys, "batch", _fixture(tmp_path, "# only comments\n"))[0] == 0


def test_svg_written(capsys, tmp_path):
    out = tmp_path / "out.svg"
    assert run(capsys, "svg", "4", "6", "10", "1", "1", "1", str(out))[0] == 0
    text = out.read_text()
    assert text.startswith("<svg") and text.rstrip().endswith("</svg>")
    for layer in ("circles", "red", "blue", "curves"):
        assert f'<g id="{layer}"' in text


def test_svg_layers(capsys, tmp_path):
    out = tmp_path / "out.svg"
    assert run(capsys, "svg", "--layers", "red,circles", "4", "6", "10", "1", "1", "1", str(out))[0] == 0
    text = out.read_text()
    assert '<g id="red"' in text and '<g id="blue"' not in text
    assert run(capsys, "svg", "--layers", "red,bogus", "4", "6", "10", "1", "1", "1", str(out))[0] == 1


def test_svg_inadmissible_writes_nothing(capsys, tmp_path):
    out = tmp_path / "out.svg"
    assert run(capsys, "svg", *INADMISSIBLE_ARGS, str(out))[0] == 3
    assert not out.exists()
    assert run(capsys, "svg", "3", "4", "3", "2", "2", "2", str(out))[0] == 2
    assert not out.exists()


def test_svg_unwritable(capsys, tmp_path):
    assert run(capsys, "svg", "4", "6", "10", "1", "1", "1", str(tmp_path / "no" / "out.svg"))[0] == 1


def test_console_entry_point_exit_code():
    res = subprocess.run(
        [sys.executable, "-m", "platslide.cli", "compute", "3", "4", "3", "2", "2", "2"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 2
    assert "violates" in res.stderr

"""Census fixture: loading rows and comparing computed words against them."""

from __future__ import annotations

import difflib
import os
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .tuple_core import SixTuple, TupleParseError, parse_tuple
from .words import ConditionError, InadmissibleError, Word, WordError, chi_words

__all__ = [
    "CENSUS_ENV",
    "CensusError",
    "CensusRow",
    "RowReport",
    "check_row",
    "default_census_path",
    "load_census",
    "parse_census_line",
    "token_diff",
]

#: Environment variable that points the census command at another fixture.
CENSUS_ENV = "PLATSLIDE_CENSUS"


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CensusRow:
    code: SixTuple
    words: Tuple[str, str, str]
    line: int = 0


@dataclass
class RowReport:
    row: CensusRow
    status: str  # ok, invalid-conditions, inadmissible, mismatch
    computed: List[str] = field(default_factory=list)
    diff: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def default_census_path() -> Path:
    override = os.environ.get(CENSUS_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("platslide") / "data" / "census.txt"))


def parse_census_line(text: str, line: int = 0) -> Optional[CensusRow]:
    """Parse one fixture line; blank and ``#`` lines give ``None``.

    The line holds nine ``|``-separated fields (six integers, three words).
    A first field carrying all six integers is accepted too.
    """
    text = text.strip()
    if not text or text.startswith("#"):
        return None
    fields = [p.strip() for p in text.split("|")]
    if len(fields) == 9:
        head, words = " ".join(fields[:6]), fields[6:]
    elif len(fields) == 4:
        head, words = fields[0], fields[1:]
    else:
        raise CensusError(f"line {line}: expected 9 fields, got {len(fields)}")
    try:
        code = parse_tuple(head)
    except TupleParseError as exc:
        raise CensusError(f"line {line}: {exc}") from None
    for w in words:
        try:
            Word.parse(w)
        except WordError as exc:
            raise CensusError(f"line {line}: {exc}") from None
    return CensusRow(code, tuple(" ".join(w.split()) for w in words), line)  # type: ignore[arg-type]


def load_census(path: Optional[os.PathLike] = None) -> List[CensusRow]:
    p = Path(path) if path is not None else default_census_path()
    rows = []
    with open(p, encoding="utf-8") as fh:
        for k, text in enumerate(fh, 1):
            row = parse_census_line(text, k)
            if row is not None:
                rows.append(row)
    return rows


def token_diff(expected: str, got: str) -> List[str]:
    """Token-level diff lines between two words."""
    out = []
    sm = difflib.SequenceMatcher(a=expected.split(), b=got.split(), autojunk=False)
    for op, i1, i2, j1, j2 in sm.get_opcodes():
        if op == "equal":
            continue
        a = " ".join(expected.split()[i1:i2]) or "-"
        b = " ".join(got.split()[j1:j2]) or "-"
        out.append(f"{op} at token {i1}: table [{a}] computed [{b}]")
    return out


def _pair_up(expected: Sequence[str], got: Sequence[str]) -> List[Tuple[str, str]]:
    # greedily match each unmatched table word to its closest computed word
    left = list(got)
    pairs = []
    for e in expected:
        if not left:
            pairs.append((e, ""))
            continue
        best = max(left, key=lambda g: difflib.SequenceMatcher(a=e.split(), b=g.split()).ratio())
        left.remove(best)
        pairs.append((e, best))
    pairs.extend(("", g) for g in left)
    return pairs


def check_row(row: CensusRow, strict_order: bool = False) -> RowReport:
    """Recompute ``row`` and compare as a multiset (or in order)."""
    t0 = time.perf_counter()
    try:
        computed = [str(w) for w in chi_words(row.code)]
    except ConditionError as exc:
        return RowReport(row, "invalid-conditions", diff=[str(exc)], elapsed=time.perf_counter() - t0)
    except InadmissibleError as exc:
        return RowReport(row, "inadmissible", diff=[str(exc)], elapsed=time.perf_counter() - t0)
    elapsed = time.perf_counter() - t0
    expected = list(row.words)
    if strict_order:
        same = computed == expected
    else:
        same = sorted(computed) == sorted(expected)
    if same:
        return RowReport(row, "ok", computed, elapsed=elapsed)
    diff: List[str] = []
    if strict_order:
        pairs = list(zip(expected, computed))
    else:
        rest_e = list(expected)
        rest_g = list(computed)
        for w in list(rest_e):
            if w in rest_g:
                rest_e.remove(w)
                rest_g.remove(w)
        pairs = _pair_up(rest_e, rest_g)
    for k, (e, g) in enumerate(pairs):
        if e == g:
            continue
        diff.append(f"word {k}: table    {e or '(none)'}")
        diff.append(f"word {k}: computed {g or '(none)'}")
        diff.extend("  " + d for d in token_diff(e, g))
    return RowReport(row, "mismatch", computed, diff, elapsed)

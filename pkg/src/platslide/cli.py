"""Command-line entry point: compute, census, batch and svg.

Exit codes: 0 ok, 1 usage or I/O, 2 condition violation, 3 inadmissible
tuple or failed curve construction, 4 census mismatch.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import click

from . import __version__
from .census import CensusError, check_row, default_census_path, load_census
from .colored_graph import edge_dump
from .curves import CurveCountError, LandmarkError
from .diagram import DiagramError
from .svg import LAYERS, parse_layers, render_svg
from .tuple_core import TupleParseError, parse_tuple
from .words import ConditionError, InadmissibleError, compute

__all__ = ["EXIT", "Outcome", "canonical_json", "main", "run", "run_tuple"]

EXIT = {"ok": 0, "usage": 1, "conditions": 2, "inadmissible": 3, "mismatch": 4}


def canonical_json(obj: object) -> str:
    """Sorted keys, no whitespace; re-serializing the parse gives the same bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


@dataclass(frozen=True)
class Outcome:
    """Everything one tuple run writes, so batch mode can replay it in order."""

    code: int
    out: str = ""
    err: str = ""


def _error(fmt: str, code: int, message: str, text: str, extra: Optional[dict] = None) -> Outcome:
    if fmt == "json":
        obj = {"error": message, "exit": code, "input": text}
        obj.update(extra or {})
        return Outcome(code, canonical_json(obj) + "\n", "")
    return Outcome(code, "", f"error: {message}\n")


def run_tuple(text: str, fmt: str = "text", dump_edges: bool = False) -> Outcome:
    """Compute the three words of one tuple given as text."""
    try:
        f = parse_tuple(text)
    except TupleParseError as exc:
        return _error(fmt, EXIT["usage"], str(exc), text)
    try:
        result = compute(f)
    except ConditionError as exc:
        return _error(fmt, EXIT["conditions"], str(exc), text, {"violated": list(exc.violated)})
    except (InadmissibleError, DiagramError) as exc:
        return _error(fmt, EXIT["inadmissible"], f"not admissible: {exc}", text)
    except (CurveCountError, LandmarkError) as exc:
        return _error(fmt, EXIT["inadmissible"], f"not a proper diagram: {exc}", text)
    words = [str(w) for w in result.words]
    d = result.diagram
    if fmt == "json":
        obj = {
            "case": int(d.kind),
            "params": d.params._asdict(),
            "tuple": list(d.code.astuple()),
            "words": words,
        }
        out = canonical_json(obj) + "\n"
    else:
        out = "".join(w + "\n" for w in words)
    err = edge_dump(d.graph) + "\n" if dump_edges else ""
    return Outcome(EXIT["ok"], out, err)


def _emit(o: Outcome) -> None:
    if o.out:
        click.echo(o.out, nl=False)
    if o.err:
        click.echo(o.err, nl=False, err=True)


FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True
)


@click.group()
@click.version_option(__version__, prog_name="platslide")
def cli() -> None:
    """Meridian words of genus-2 crystallization codes."""


@cli.command("compute")
@click.argument("numbers", nargs=-1, required=True)
@FORMAT
@click.option("--dump-edges", is_flag=True, help="Write the colored edge list to stderr.")
def compute_cmd(numbers: Sequence[str], fmt: str, dump_edges: bool) -> int:
    """Print the three words of the six integers h0 h1 h2 q0 q1 q2."""
    o = run_tuple(" ".join(numbers), fmt, dump_edges)
    _emit(o)
    return o.code


def _read_lines(path: str) -> List[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise click.FileError(path, hint=exc.strerror or str(exc)) from None


@cli.command("census")
@click.argument("path", required=False)
@FORMAT
@click.option("--strict-order", is_flag=True, help="Also require the table's word order.")
def census_cmd(path: Optional[str], fmt: str, strict_order: bool) -> int:
    """Recompute every fixture row and compare the word sets."""
    fixture = path or str(default_census_path())
    try:
        rows = load_census(fixture)
    except OSError as exc:
        raise click.FileError(fixture, hint=exc.strerror or str(exc)) from None
    except CensusError as exc:
        raise click.UsageError(f"{fixture}: {exc}") from None
    if not rows:
        click.echo(f"warning: {fixture} holds no rows", err=True)
    reports = [check_row(r, strict_order) for r in rows]
    bad = [r for r in reports if not r.ok]
    if fmt == "json":
        obj = {
            "fixture": os.path.basename(fixture),
            "matched": len(reports) - len(bad),
            "rows": [
                {
                    "computed": r.computed,
                    "diff": r.diff,
                    "line": r.row.line,
                    "status": r.status,
                    "tuple": list(r.row.code.astuple()),
                }
                for r in reports
            ],
            "total": len(reports),
        }
        click.echo(canonical_json(obj))
    else:
        for r in reports:
            click.echo(f"{r.status:<18} {r.row.code}  line {r.row.line}  {r.elapsed * 1000:.1f} ms")
            for line in r.diff:
                click.echo("    " + line)
        click.echo(f"{len(reports) - len(bad)}/{len(reports)} rows match")
    return EXIT["mismatch"] if bad else EXIT["ok"]


def _batch_lines(lines: Sequence[str]) -> List[str]:
    out = []
    for line in lines:
        text = line.split("#", 1)[0].strip()
        if text:
            out.append(text)
    return out


@cli.command("batch")
@click.argument("path")
@FORMAT
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes.")
def batch_cmd(path: str, fmt: str, jobs: Optional[int]) -> int:
    """Run compute on every tuple of a file, one per line."""
    tuples = _batch_lines(_read_lines(path))
    if not tuples:
        return EXIT["ok"]
    workers = jobs or min(len(tuples), os.cpu_count() or 1)
    if workers == 1:
        outcomes = [run_tuple(t, fmt) for t in tuples]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map keeps input order whatever order the workers finish in
            outcomes = list(pool.map(run_tuple, tuples, [fmt] * len(tuples), chunksize=4))
    for o in outcomes:
        _emit(o)
    return max(o.code for o in outcomes)


@cli.command("svg")
@click.argument("args", nargs=-1, required=True)
@click.option(
    "--layers", default=",".join(LAYERS), show_default=True, help="Comma list of layers to draw."
)
def svg_cmd(args: Sequence[str], layers: str) -> int:
    """Draw the diagram of six integers into the file named last."""
    if len(args) < 2:
        raise click.UsageError("expected six integers and an output path")
    *numbers, out = args
    try:
        chosen = parse_layers(layers)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--layers") from None
    text = " ".join(numbers)
    o = run_tuple(text)
    if o.code:
        _emit(o)
        return o.code
    result = compute(parse_tuple(text))
    doc = render_svg(result.diagram, result.blues, result.curves, chosen)
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc.strerror or exc}", err=True)
        return EXIT["usage"]
    return EXIT["ok"]


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="platslide", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT["usage"]
    except click.ClickException as exc:
        exc.show()
        return EXIT["usage"]
    return rv if isinstance(rv, int) else EXIT["ok"]


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

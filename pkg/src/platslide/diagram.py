"""Rich Heegaard diagram: case split, boundary circles and red arcs.

Removing circle ``C2`` and cutting the surface along ``C0`` and ``C1``
leaves a sphere with four holes.  Each boundary hole is a copy ``C_i^+`` or
``C_i^-`` of a cut circle; ``+`` copies receive the color-2 edges and ``-``
copies the color-3 edges.  A red arc follows a maximal path of alternating
2/3 edges whose inner vertices lie on ``C2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple

from .colored_graph import ColoredGraph, build_graph, count_residues
from .tuple_core import SixTuple, validate_conditions

__all__ = [
    "BUNDLES",
    "POSITIONS",
    "BoundaryCircle",
    "CaseKind",
    "DiagramError",
    "DiagramParams",
    "Endpoint",
    "RedArc",
    "RichDiagram",
    "build_red_arcs",
    "bundle_intervals",
    "case_predicates",
    "classify_case",
    "label_vertices",
    "position_map",
]

POSITIONS = ("Tl", "Tr", "Bl", "Br")
BUNDLES = ("a-top", "a-bottom", "b-back", "b-front", "c", "d")


class DiagramError(ValueError):
    pass


class CaseKind(enum.IntEnum):
    CASE1 = 1  # q2 < h1, h2
    CASE2 = 2  # h2 <= q2 <= h1
    CASE3 = 3  # h1 < q2 < h2
    CASE4 = 4  # q2 > h1, h2


class DiagramParams(NamedTuple):
    a: int
    b: int
    c: int
    d: int


class Endpoint(NamedTuple):
    """A vertex copy on a boundary circle: position tag and label."""

    position: str
    label: int

    def __str__(self) -> str:
        return f"{self.position}:{self.label}"


@dataclass(frozen=True)
class BoundaryCircle:
    position: str
    circle: int
    copy: str  # "+" or "-"
    size: int
    orientation: int  # +1 ascending labels, -1 descending
    depth: Dict[int, str] = field(default_factory=dict, compare=False)

    @property
    def name(self) -> str:
        return f"C{self.circle}{self.copy}"

    def slots(self) -> List[int]:
        """Labels in the cyclic order of the circle's orientation."""
        labels = list(range(self.size))
        return labels if self.orientation > 0 else labels[::-1]

    def front(self) -> List[int]:
        return [j for j in self.slots() if self.depth.get(j, "front") == "front"]


@dataclass(frozen=True)
class RedArc:
    end1: Endpoint
    end2: Endpoint
    bundle: str
    depth: str  # front, back or mixed
    through: Tuple[int, ...]  # labels of the C2 vertices crossed, end1 to end2

    def other(self, e: Endpoint) -> Endpoint:
        if e == self.end1:
            return self.end2
        if e == self.end2:
            return self.end1
        raise KeyError(e)


@dataclass(frozen=True)
class RichDiagram:
    code: SixTuple
    kind: CaseKind
    params: DiagramParams
    circles: Dict[str, BoundaryCircle]
    arcs: Tuple[RedArc, ...]
    graph: ColoredGraph = field(repr=False, compare=False)

    def arc_at(self) -> Dict[Endpoint, RedArc]:
        out = {}
        for arc in self.arcs:
            out[arc.end1] = arc
            out[arc.end2] = arc
        return out

    def partner(self) -> Dict[Endpoint, Endpoint]:
        """Red-arc partner of every endpoint."""
        out = {}
        for arc in self.arcs:
            out[arc.end1] = arc.end2
            out[arc.end2] = arc.end1
        return out

    def endpoints(self):
        for pos in POSITIONS:
            for j in range(self.circles[pos].size):
                yield Endpoint(pos, j)


def case_predicates(f: SixTuple) -> Dict[CaseKind, bool]:
    """Truth value of each case inequality on the normalized twists."""
    f = f.normalized()
    h1, h2, q2 = f.h1, f.h2, f.q2
    return {
        CaseKind.CASE1: q2 < h1 and q2 < h2,
        CaseKind.CASE2: h2 <= q2 <= h1,
        CaseKind.CASE3: h1 < q2 < h2,
        CaseKind.CASE4: q2 > h1 and q2 > h2,
    }


def classify_case(f: SixTuple) -> Tuple[CaseKind, DiagramParams]:
    """Pick the case and the bundle multiplicities ``a, b, c, d``.

    >>> classify_case(SixTuple(6, 6, 6, 1, 7, 7))
    (<CaseKind.CASE4: 4>, DiagramParams(a=6, b=5, c=1, d=1))
    """
    f = f.normalized()
    h0, h1, h2, q2 = f.h0, f.h1, f.h2, f.q2
    preds = case_predicates(f)
    hits = [k for k, v in preds.items() if v]
    if not hits:
        raise DiagramError(f"{f}: no case applies")
    # the inequalities overlap only on ties, which go to case 2
    kind = CaseKind.CASE2 if CaseKind.CASE2 in hits else hits[0]
    if kind is CaseKind.CASE1:
        p = DiagramParams(h0, q2, h2 - q2, h1 - q2)
    elif kind is CaseKind.CASE2:
        p = DiagramParams(h0, h2, q2 - h2, h1 - q2)
    elif kind is CaseKind.CASE3:
        p = DiagramParams(h0, h1, q2 - h1, h2 - q2)
    else:
        p = DiagramParams(h0, h1 + h2 - q2, q2 - h1, q2 - h2)
    return kind, p


def position_map(kind: CaseKind) -> Dict[Tuple[int, str], str]:
    """Which copy ``(circle, sign)`` sits at which boundary position."""
    if kind is CaseKind.CASE3:
        return {(0, "-"): "Tl", (1, "-"): "Tr", (0, "+"): "Bl", (1, "+"): "Br"}
    return {(1, "+"): "Tl", (0, "+"): "Tr", (1, "-"): "Bl", (0, "-"): "Br"}


def bundle_intervals(kind: CaseKind, f: SixTuple) -> List[Tuple[int, str]]:
    """Bundles crossing ``C2`` as consecutive runs of ``C2`` labels.

    Returns ``(end, bundle)`` pairs: labels below ``end`` and at least the
    previous ``end`` belong to ``bundle``.
    """
    f = f.normalized()
    h1, h2, q2 = f.h1, f.h2, f.q2
    if kind is CaseKind.CASE1:
        runs = [(q2, "b-back"), (h2, "c"), (h2 + q2, "b-front"), (h1 + h2, "d")]
    elif kind is CaseKind.CASE2:
        runs = [(h2, "b-back"), (q2, "c"), (q2 + h2, "b-front"), (h1 + h2, "d")]
    elif kind is CaseKind.CASE3:
        runs = [(q2 - h1, "c"), (q2, "b-back"), (h2, "d"), (h1 + h2, "b-front")]
    else:
        runs = [(q2 - h1, "c"), (h2, "b-back"), (q2, "d"), (h1 + h2, "b-front")]
    return runs


def _bundle_of_label(runs: List[Tuple[int, str]], k: int) -> str:
    for end, name in runs:
        if k < end:
            return name
    raise DiagramError(f"C2 label {k} outside every bundle")


def label_vertices(f: SixTuple, kind: CaseKind) -> Dict[str, BoundaryCircle]:
    """The four boundary circles, all reversed in case 4."""
    f = f.normalized()
    sizes = f.circle_sizes()
    orient = -1 if kind is CaseKind.CASE4 else 1
    out = {}
    for (circle, copy), pos in position_map(kind).items():
        out[pos] = BoundaryCircle(pos, circle, copy, sizes[circle], orient)
    return out


def _walk(g: ColoredGraph, circle: int, j: int, copy: str):
    color = 2 if copy == "+" else 3
    v = (circle, j)
    through = []
    while True:
        v = g.step(color, v)
        if v[0] != 2:
            return v, ("+" if color == 2 else "-"), tuple(through)
        through.append(v[1])
        color = 5 - color


def build_red_arcs(f: SixTuple, graph: Optional[ColoredGraph] = None) -> RichDiagram:
    """Trace every red arc and attach its bundle and depth."""
    f = f.normalized()
    bad = validate_conditions(f)
    if bad:
        raise DiagramError(f"{f} violates conditions {bad}")
    g = graph if graph is not None else build_graph(f)
    if count_residues(g, (2, 3)) != 3:
        raise DiagramError(f"{f} is not admissible")
    kind, params = classify_case(f)
    pmap = position_map(kind)
    runs = bundle_intervals(kind, f)
    circles = label_vertices(f, kind)

    arcs: List[RedArc] = []
    seen = set()
    for circle in (0, 1):
        for j in range(g.sizes[circle]):
            for copy in "+-":
                start = Endpoint(pmap[(circle, copy)], j)
                if start in seen:
                    continue
                (ci, cj), landing, through = _walk(g, circle, j, copy)
                end = Endpoint(pmap[(ci, landing)], cj)
                seen.update((start, end))
                if through:
                    if len(through) != 1:
                        raise DiagramError(f"red arc {start}-{end} crosses C2 {len(through)} times")
                    bundle = _bundle_of_label(runs, through[0])
                else:
                    bundle = "a-top" if start.position[0] == "T" else "a-bottom"
                ends = {start.position, end.position}
                if bundle == "b-back":
                    depth = "back"
                elif bundle == "c" and ends == {"Tl", "Bl"}:
                    depth = "mixed"
                else:
                    depth = "front"
                arcs.append(RedArc(start, end, bundle, depth, through))

    # endpoint depth flags, stored on the circles
    flags: Dict[str, Dict[int, str]] = {p: {} for p in POSITIONS}
    for arc in arcs:
        for e in (arc.end1, arc.end2):
            if arc.depth == "back" or (arc.depth == "mixed" and e.position == "Bl"):
                flags[e.position][e.label] = "back"
            else:
                flags[e.position][e.label] = "front"
    circles = {
        p: BoundaryCircle(c.position, c.circle, c.copy, c.size, c.orientation, flags[p])
        for p, c in circles.items()
    }
    return RichDiagram(f, kind, params, circles, tuple(arcs), g)

"""Blue identification arcs, landmarks, and the three traced curves.

Each handle of the genus-2 surface joins a top circle to the bottom circle
on the same side (``Tl`` with ``Bl``, ``Tr`` with ``Br``).  Equal labels on
the two circles are joined by a blue arc that may wind once around the
handle.  Red and blue arcs alternate along three closed curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from .diagram import CaseKind, Endpoint, RichDiagram

__all__ = [
    "BlueArc",
    "Curve",
    "CurveCountError",
    "LandmarkError",
    "Landmarks",
    "READINGS",
    "compute_landmarks",
    "connect_blue",
    "mate",
    "orient_curve",
    "orientation_start",
    "trace_curves",
    "winding_rule",
]

SIDES = ("l", "r")
#: Ways of reading the winding anchor; only the first reproduces the census.
READINGS = ("calibrated", "literal")


class CurveCountError(RuntimeError):
    """The diagram does not close up into exactly three curves."""


class LandmarkError(RuntimeError):
    pass


class Landmarks(NamedTuple):
    front_start: int  # first label of the front run
    front_end: int  # last label of the front run
    anchor: int  # where the positive winding starts
    order: Tuple[int, ...]  # labels of the side's circles along their orientation


class BlueArc(NamedTuple):
    """Join of ``T<side>:label`` and ``B<side>:label``.

    ``winding`` is measured along the handle's ``b`` direction when the arc
    is run from top to bottom.
    """

    side: str
    label: int
    winding: int

    @property
    def top(self) -> Endpoint:
        return Endpoint("T" + self.side, self.label)

    @property
    def bottom(self) -> Endpoint:
        return Endpoint("B" + self.side, self.label)


def mate(e: Endpoint) -> Endpoint:
    """The other end of the blue arc at ``e``."""
    flipped = ("B" if e.position[0] == "T" else "T") + e.position[1]
    return Endpoint(flipped, e.label)


def _arc(order: Sequence[int], a: int, b: int) -> List[int]:
    """Oriented arc from ``a`` to ``b``, both included."""
    idx = order.index(a)
    out = [a]
    while out[-1] != b:
        idx = (idx + 1) % len(order)
        out.append(order[idx])
    return out


def _block(order: Sequence[int], members: Iterable[int]) -> Tuple[int, int]:
    """First and last label of the cyclic run formed by ``members``."""
    s = set(members)
    n = len(order)
    if not s:
        raise LandmarkError("empty block")
    if len(s) == n:
        return order[0], order[-1]
    starts = [j for i, j in enumerate(order) if j in s and order[i - 1] not in s]
    ends = [j for i, j in enumerate(order) if j in s and order[(i + 1) % n] not in s]
    if len(starts) != 1:
        raise LandmarkError(f"labels {sorted(s)} do not form one run")
    return starts[0], ends[0]


def compute_landmarks(diagram: RichDiagram, reading: str = "calibrated") -> Dict[str, Landmarks]:
    """Front run and winding anchor for both handles.

    The front run is the front part of ``Bl`` (left) or ``Tr`` (right)
    read along ``order``.  For the anchor the calibrated reading takes the first vertex of
    ``Tl`` joined to a bottom circle and the first vertex of ``Br`` on the
    bottom a-bundle.  The literal reading takes the first (last in case 4)
    vertex of ``Tl`` joined to a bottom circle and the last (first in case
    4) vertex of ``Br`` joined to a left circle.
    """
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    arc_at = diagram.arc_at()
    circles = diagram.circles
    case4 = diagram.kind is CaseKind.CASE4
    out = {}
    for side in SIDES:
        order = tuple(circles["T" + side].slots())
        front_pos = "Bl" if side == "l" else "Tr"
        front = circles[front_pos].front()
        if not front:
            raise LandmarkError(f"{diagram.code}: empty front part on {front_pos}")
        start, end = _block(order, front)
        if side == "l" and diagram.kind is CaseKind.CASE3:
            # census-calibrated: the bundle depths put the back run of Bl one
            # slot later than the words require
            f = diagram.code
            start, end = (f.h0 + f.q2) % len(order), (f.h0 - 1) % len(order)
        if side == "l":
            to_bottom = [j for j in order if arc_at[Endpoint("Tl", j)].bundle != "a-top"]
            first, last = _block(order, to_bottom)
            anchor = last if (reading == "literal" and case4) else first
        elif reading == "calibrated":
            on_a = [j for j in order if arc_at[Endpoint("Br", j)].bundle == "a-bottom"]
            # with no bottom a-bundle the rule degenerates to the first slot
            anchor = _block(order, on_a)[0] if on_a else order[0]
        else:
            to_left = [
                j for j in order
                if arc_at[Endpoint("Br", j)].other(Endpoint("Br", j)).position[1] == "l"
            ]
            first, last = _block(order, to_left)
            anchor = first if case4 else last
        out[side] = Landmarks(start, end, anchor, order)
    return out


def winding_rule(marks: Landmarks, tie_inside: bool) -> Dict[int, int]:
    """Winding of the blue arc at every label of one handle.

    When the anchor lies on the front run, labels from the anchor up to but
    excluding the run's start wind +1 and the rest 0.  Otherwise the front
    run winds 0, the labels strictly between its end and the anchor wind
    -1 and the remainder +1.  ``tie_inside`` decides an anchor sitting on
    the run's end.
    """
    start, end, anchor, order = marks
    run = _arc(order, start, end)
    inside = anchor in run
    if inside and anchor == end and start != end and not tie_inside:
        inside = False
    if inside:
        w = {j: 0 for j in order}
        for j in _arc(order, anchor, start):
            if j != start:
                w[j] = 1
    else:
        w = {j: 1 for j in order}
        for j in run:
            w[j] = 0
        for j in _arc(order, end, anchor)[1:-1]:
            w[j] = -1
    return w


def connect_blue(diagram: RichDiagram, marks: Dict[str, Landmarks]) -> List[BlueArc]:
    """All blue arcs with their windings."""
    # an anchor on the run end counts as inside in cases 1 and 2 only
    tie_inside = diagram.kind in (CaseKind.CASE1, CaseKind.CASE2)
    blues = []
    for side in SIDES:
        w = winding_rule(marks[side], tie_inside)
        blues.extend(BlueArc(side, j, w[j]) for j in marks[side].order)
    return blues


@dataclass(frozen=True)
class Curve:
    """A closed curve as consecutive (red arc, blue arc) steps.

    Step ``k`` runs the red arc from ``reds[k][0]`` to ``reds[k][1]`` and
    then the blue arc from ``reds[k][1]`` to ``reds[k + 1][0]``.
    """

    reds: Tuple[Tuple[Endpoint, Endpoint], ...]
    blues: Tuple[BlueArc, ...]

    def __len__(self) -> int:
        return 2 * len(self.reds)

    def elements(self) -> List[Tuple[str, object]]:
        out: List[Tuple[str, object]] = []
        for red, blue in zip(self.reds, self.blues):
            out.append(("red", red))
            out.append(("blue", blue))
        return out

    def endpoints(self) -> List[Endpoint]:
        return [e for red in self.reds for e in red]

    def reversed(self) -> "Curve":
        n = len(self.reds)
        reds = tuple((self.reds[k][1], self.reds[k][0]) for k in reversed(range(n)))
        # the blue arc after a reversed red arc is the one that came before it
        blues = tuple(self.blues[(k - 1) % n] for k in reversed(range(n)))
        return Curve(reds, blues)

    def rotated(self, k: int) -> "Curve":
        return Curve(self.reds[k:] + self.reds[:k], self.blues[k:] + self.blues[:k])


def trace_curves(diagram: RichDiagram, blues: Sequence[BlueArc]) -> List[Curve]:
    """Follow red then blue arcs until every endpoint is used.

    Raises :class:`CurveCountError` unless exactly three curves close up.
    """
    partner = diagram.partner()
    blue_at = {}
    for b in blues:
        for e in (b.top, b.bottom):
            if e in blue_at:
                raise CurveCountError(f"two blue arcs meet {e}")
            blue_at[e] = b
    if set(blue_at) != set(partner):
        raise CurveCountError("red and blue arcs do not cover the same endpoints")
    seen = set()
    curves = []
    for start in diagram.endpoints():
        if start in seen:
            continue
        reds, bl = [], []
        e = start
        while True:
            f = partner[e]
            if e in seen or f in seen:
                raise CurveCountError(f"endpoint reused while tracing from {start}")
            seen.update((e, f))
            reds.append((e, f))
            bl.append(blue_at[f])
            e = mate(f)
            if e == start:
                break
        curves.append(Curve(tuple(reds), tuple(bl)))
    if len(curves) != 3:
        raise CurveCountError(f"{diagram.code}: found {len(curves)} curves, expected 3")
    return curves


def orientation_start(curve: Curve, diagram: RichDiagram) -> Endpoint:
    """Endpoint the oriented curve leaves along a red arc.

    On ``Br`` the labels are read along the circle's orientation starting
    at the first vertex of the bottom a-bundle; the curve starts at the
    last such vertex it meets.  A curve missing ``Br`` uses ``Bl``.
    """
    f = diagram.code
    case3 = diagram.kind is CaseKind.CASE3
    visited = curve.endpoints()
    for pos in ("Br", "Bl"):
        labels = {e.label for e in visited if e.position == pos}
        if not labels:
            continue
        n = diagram.circles[pos].size
        # the bottom a-bundle leaves Br at labels anchor, anchor + 1, ...
        anchor = f.h1 if case3 else f.q0
        if diagram.kind is CaseKind.CASE4:
            # reversed orientation: read downward from the bundle's top label
            return Endpoint(pos, max(labels, key=lambda j: (j - anchor - f.h0) % n))
        return Endpoint(pos, max(labels, key=lambda j: (j - anchor) % n))
    raise CurveCountError(f"{f}: a curve meets neither bottom circle")


def orient_curve(curve: Curve, diagram: RichDiagram) -> Curve:
    """Rotate and, if needed, reverse ``curve`` so it starts at its
    :func:`orientation_start` endpoint leaving along the red arc."""
    start = orientation_start(curve, diagram)
    for c in (curve, curve.reversed()):
        for k, (a, _) in enumerate(c.reds):
            if a == start:
                return c.rotated(k)
    raise CurveCountError(f"start {start} not on the curve")

"""The 4-colored graph of a six-integer code, residues and genus."""

from __future__ import annotations

from dataclasses import dataclass
import random
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from ._backend import kernels
from .tuple_core import SixTuple, validate_conditions

__all__ = [
    "COLORS",
    "ColoredGraph",
    "GraphError",
    "Vertex",
    "build_graph",
    "count_residues",
    "count_residues_by_walk",
    "edge_dump",
    "heegaard_genus",
    "is_admissible",
    "random_admissible",
]

COLORS = (0, 1, 2, 3)


class GraphError(ValueError):
    """The matchings are not fixed-point-free involutions."""


class Vertex(NamedTuple):
    circle: int
    pos: int

    def __str__(self) -> str:
        return f"({self.circle},{self.pos})"


@dataclass(frozen=True)
class ColoredGraph:
    """Vertices ``{i} x Z_{2l_i}`` joined by four perfect matchings.

    ``matching[c][v]`` is the partner of the flat vertex index ``v`` along
    color ``c``.  Use :meth:`flat` and :meth:`vertex` to convert indices.
    """

    code: SixTuple
    sizes: Tuple[int, int, int]
    matching: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def offset(self, circle: int) -> int:
        return sum(self.sizes[:circle])

    def flat(self, v: Tuple[int, int]) -> int:
        circle, pos = v
        return self.offset(circle) + pos % self.sizes[circle]

    def vertex(self, index: int) -> Vertex:
        for circle, n in enumerate(self.sizes):
            if index < n:
                return Vertex(circle, index)
            index -= n
        raise IndexError(index)

    def vertices(self) -> Iterator[Vertex]:
        for circle, n in enumerate(self.sizes):
            for pos in range(n):
                yield Vertex(circle, pos)

    def step(self, color: int, v: Tuple[int, int]) -> Vertex:
        """Image of ``v`` under the involution of ``color``."""
        return self.vertex(self.matching[color][self.flat(v)])

    def edges(self, color: int) -> Iterator[Tuple[Vertex, Vertex]]:
        m = self.matching[color]
        for v, u in enumerate(m):
            if v < u:
                yield self.vertex(v), self.vertex(u)

    def is_bipartite(self) -> bool:
        side = [-1] * self.order
        for start in range(self.order):
            if side[start] >= 0:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for m in self.matching:
                    u = m[v]
                    if side[u] < 0:
                        side[u] = 1 - side[v]
                        stack.append(u)
                    elif side[u] == side[v]:
                        return False
        return True


def build_graph(f: SixTuple, check: bool = True) -> ColoredGraph:
    """Build the graph from the four involutions.

    ``check`` refuses tuples violating any condition; the involution check
    always runs.
    """
    f = f.normalized()
    if check:
        bad = validate_conditions(f)
        if bad:
            raise GraphError(f"{f} violates conditions {bad}")
    sizes = f.circle_sizes()
    if 0 in sizes:
        raise GraphError(f"{f} has an empty circle")
    mats = kernels.build_matchings(*f.astuple())
    for c, m in enumerate(mats):
        if not kernels.is_perfect_involution(m):
            raise GraphError(f"color {c} is not a fixed-point-free involution for {f}")
    return ColoredGraph(f, sizes, tuple(tuple(m) for m in mats))  # type: ignore[arg-type]


def _colors(colors: Iterable[int]) -> List[int]:
    cs = sorted(set(colors))
    if not cs:
        raise ValueError("residue query needs at least one color")
    if any(c not in COLORS for c in cs):
        raise ValueError(f"colors must lie in {COLORS}")
    return cs


def count_residues(g: ColoredGraph, colors: Iterable[int]) -> int:
    """Number of connected components keeping only edges of ``colors``."""
    cs = _colors(colors)
    return kernels.count_components(g.order, [g.matching[c] for c in cs])


def count_residues_by_walk(g: ColoredGraph, colors: Sequence[int]) -> int:
    """Cycle-walk residue count for exactly two colors (cross-check oracle)."""
    cs = _colors(colors)
    if len(cs) != 2:
        raise ValueError("the cycle walk needs exactly two colors")
    return kernels.count_alternating_cycles(g.matching[cs[0]], g.matching[cs[1]])


def is_admissible(f: SixTuple) -> bool:
    """Conditions hold and the {2,3}-subgraph has exactly three components."""
    if validate_conditions(f):
        return False
    return count_residues(build_graph(f), (2, 3)) == 3


def random_admissible(rng: random.Random, hmax: int = 20) -> SixTuple:
    """Draw admissible codes with ``h_i <= hmax`` by rejection."""
    while True:
        h = [rng.randint(0, hmax) for _ in range(3)]
        if h.count(0) > 1 or any((h[i] + h[(i + 1) % 3]) % 2 for i in range(3)):
            continue
        parity = rng.randint(0, 1)
        q = []
        for i in range(3):
            # condition 4 fixes the parity of q_i, condition 3 makes it common
            opts = [x for x in range(h[i - 1] + h[i]) if x % 2 == parity and (h[i] + x) % 2]
            if not opts:
                break
            q.append(rng.choice(opts))
        if len(q) == 3:
            f = SixTuple(*h, *q)
            if is_admissible(f):
                return f


def heegaard_genus(g: ColoredGraph, c: int, d: int) -> int:
    """Genus of the splitting surface separating colors ``c`` and ``d``.

    It is ``rho(other pair) - rho(all but c) - rho(all but d) + 1``.
    """
    if c == d:
        raise ValueError("colors must differ")
    rest = [x for x in COLORS if x not in (c, d)]
    not_c = [x for x in COLORS if x != c]
    not_d = [x for x in COLORS if x != d]
    return count_residues(g, rest) - count_residues(g, not_c) - count_residues(g, not_d) + 1


def edge_dump(g: ColoredGraph) -> str:
    """One ``(i,j) -c-> (i',j')`` line per edge, colors in order."""
    lines = []
    for c in COLORS:
        for u, v in g.edges(c):
            lines.append(f"{u} -{c}-> {v}")
    return "\n".join(lines)

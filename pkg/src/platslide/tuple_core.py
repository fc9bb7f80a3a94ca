"""Six-integer codes of genus-2 crystallizations: parsing and validation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Tuple

__all__ = [
    "CONDITIONS",
    "HalfSums",
    "SixTuple",
    "TupleParseError",
    "half_sums",
    "parse_tuple",
    "validate_conditions",
]

#: Human-readable statement of each numbered condition.
CONDITIONS = {
    1: "h_i + h_{i+1} is even for every i",
    2: "0 <= q_i < h_{i-1} + h_i for every i",
    3: "q0, q1, q2 share one parity",
    4: "h_i + q_i is odd for every i",
    5: "at most one h_i is zero",
}


class TupleParseError(ValueError):
    """Raised when text does not hold exactly six non-negative integers."""


class HalfSums(NamedTuple):
    l0: int
    l1: int
    l2: int


@dataclass(frozen=True)
class SixTuple:
    """The code ``(h0, h1, h2, q0, q1, q2)``.

    ``h`` counts the connecting arcs between consecutive circles and ``q``
    holds the per-circle twist.  Circle ``i`` carries ``h[i-1] + h[i]``
    vertices, indices taken mod 3.
    """

    h0: int
    h1: int
    h2: int
    q0: int
    q1: int
    q2: int

    @classmethod
    def of(cls, values) -> "SixTuple":
        vals = tuple(int(v) for v in values)
        if len(vals) != 6:
            raise TupleParseError(f"expected 6 integers, got {len(vals)}")
        return cls(*vals)

    @property
    def h(self) -> Tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)

    @property
    def q(self) -> Tuple[int, int, int]:
        return (self.q0, self.q1, self.q2)

    def circle_sizes(self) -> Tuple[int, int, int]:
        """Vertex count ``2 l_i = h_{i-1} + h_i`` of each circle."""
        h = self.h
        return tuple(h[(i - 1) % 3] + h[i] for i in range(3))  # type: ignore[return-value]

    def normalized(self) -> "SixTuple":
        """Reduce every twist mod its circle size (sizes of zero are left alone)."""
        sizes = self.circle_sizes()
        q = tuple(qi % n if n > 0 else qi for qi, n in zip(self.q, sizes))
        return SixTuple(*self.h, *q)

    def astuple(self) -> Tuple[int, int, int, int, int, int]:
        return (self.h0, self.h1, self.h2, self.q0, self.q1, self.q2)

    def __iter__(self) -> Iterator[int]:
        return iter(self.astuple())

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.astuple()) + ")"


_TOKEN = re.compile(r"[\s,]+")


def parse_tuple(text: str) -> SixTuple:
    """Parse six integers separated by whitespace and/or commas.

    Only arity, integrality and sign are checked here.

    >>> parse_tuple("3,3,3,2,2,2")
    SixTuple(h0=3, h1=3, h2=3, q0=2, q1=2, q2=2)
    """
    stripped = text.strip().strip("()[]")
    tokens = [t for t in _TOKEN.split(stripped) if t]
    if len(tokens) != 6:
        raise TupleParseError(f"expected 6 integers, got {len(tokens)}")
    values: List[int] = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise TupleParseError(f"not an integer: {tok!r}") from None
    if any(v < 0 for v in values):
        raise TupleParseError("values must be non-negative")
    return SixTuple(*values)


def validate_conditions(f: SixTuple, normalize: bool = True) -> List[int]:
    """Return the sorted list of violated condition numbers (1 to 5).

    Every condition is checked on its own, so all violations are reported.
    With ``normalize`` (the default) twists are first reduced mod their
    circle size, which means condition 2 only fails on an empty circle.
    """
    h = f.h
    if normalize:
        f = f.normalized()
    q = f.q
    sizes = f.circle_sizes()
    bad = []
    if any((h[i] + h[(i + 1) % 3]) % 2 for i in range(3)):
        bad.append(1)
    if any(not 0 <= q[i] < sizes[i] for i in range(3)):
        bad.append(2)
    if len({qi % 2 for qi in q}) > 1:
        bad.append(3)
    if any((h[i] + q[i]) % 2 == 0 for i in range(3)):
        bad.append(4)
    if sum(1 for hi in h if hi == 0) > 1:
        bad.append(5)
    return bad


def half_sums(f: SixTuple) -> HalfSums:
    """Half the circle sizes, ``l_i = (h_{i-1} + h_i) / 2``."""
    sizes = f.circle_sizes()
    if any(n % 2 for n in sizes):
        raise ValueError(f"{f}: odd circle size {sizes}, condition 1 fails")
    return HalfSums(*(n // 2 for n in sizes))

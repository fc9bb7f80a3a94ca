"""Words in surface braid groups and the meridian words of a code.

Letters are ``al ar bl br`` (the genus-2 generators), ``s<k>`` for the
strand twist ``sigma_k`` and ``a<i>``/``b<i>`` for general genus; ``^-1``
marks an inverse.  Words are never reduced unless :func:`free_reduce` is
called.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .colored_graph import build_graph, count_residues
from .curves import BlueArc, Curve, compute_landmarks, connect_blue, orient_curve, trace_curves
from .diagram import CaseKind, Endpoint, RichDiagram, build_red_arcs
from .tuple_core import SixTuple, validate_conditions

__all__ = [
    "Computation",
    "ConditionError",
    "InadmissibleError",
    "Letter",
    "PairContext",
    "SHAPES",
    "Word",
    "WordError",
    "alpha_pq",
    "apply_move",
    "bridge_word",
    "chi_words",
    "compute",
    "curve_word",
    "elementary_word",
    "free_reduce",
    "pair_context",
    "plat_sum",
    "psl",
    "psl_star",
    "twist_substitution",
    "untwist_substitution",
]

_NAMED = {"al": ("a", 1), "ar": ("a", 2), "bl": ("b", 1), "br": ("b", 2)}
_TOKEN = re.compile(r"^(al|ar|bl|br|s[1-9]\d*|[ab][1-9]\d*)(\^-1|\^1)?$")


class WordError(ValueError):
    pass


class ConditionError(ValueError):
    """The code violates some of the five numbered conditions."""

    def __init__(self, code: SixTuple, violated: Sequence[int]):
        self.code = code
        self.violated = list(violated)
        super().__init__(f"{code} violates conditions {self.violated}")


class InadmissibleError(ValueError):
    """The code passes the conditions but does not give a crystallization."""


class Letter(NamedTuple):
    gen: str
    exp: int = 1

    @classmethod
    def parse(cls, token: str) -> "Letter":
        m = _TOKEN.match(token)
        if not m:
            raise WordError(f"bad letter {token!r}")
        return cls(m.group(1), -1 if m.group(2) == "^-1" else 1)

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.exp)

    @property
    def kind(self) -> str:
        """``a``, ``b`` or ``s``."""
        return self.gen[0]

    @property
    def index(self) -> int:
        if self.gen in _NAMED:
            return _NAMED[self.gen][1]
        return int(self.gen[1:])

    def __str__(self) -> str:
        return self.gen if self.exp == 1 else self.gen + "^-1"


def sigma(k: int, exp: int = 1) -> Letter:
    if k < 1:
        raise WordError(f"sigma index must be positive, got {k}")
    return Letter(f"s{k}", exp)


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters in ``B_{genus, strands}``."""

    letters: Tuple[Letter, ...] = ()
    genus: int = 2
    strands: int = 2

    @classmethod
    def parse(cls, text: str, genus: int = 2, strands: int = 2) -> "Word":
        return cls(tuple(Letter.parse(t) for t in text.split()), genus, strands)

    @classmethod
    def of(cls, letters: Iterable[Union[Letter, str]], genus: int = 2, strands: int = 2) -> "Word":
        out = tuple(x if isinstance(x, Letter) else Letter.parse(x) for x in letters)
        return cls(out, genus, strands)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters, self.genus, max(self.strands, other.strands))

    def inverse(self) -> "Word":
        return Word(tuple(x.inverse() for x in reversed(self.letters)), self.genus, self.strands)

    def exponent_sum(self, kind: str) -> int:
        return sum(x.exp for x in self.letters if x.kind == kind)

    def validate(self) -> None:
        """Check every letter fits the ambient genus and strand count."""
        for x in self.letters:
            if x.kind == "s":
                if not 1 <= x.index < self.strands:
                    raise WordError(f"{x} needs more than {self.strands} strands")
            elif not 1 <= x.index <= self.genus:
                raise WordError(f"{x} needs genus above {self.genus}")


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: List[Letter] = []
    for x in w.letters:
        if out and out[-1].gen == x.gen and out[-1].exp == -x.exp:
            out.pop()
        else:
            out.append(x)
    return Word(tuple(out), w.genus, w.strands)


# --- plat calculus ---------------------------------------------------------


def bridge_word(n: int, m: int) -> Word:
    """The connecting word ``prod_i prod_j sigma_{2n-i+j}`` of a plat sum."""
    if n < 1 or m < 1:
        raise WordError("plat sizes must be positive")
    letters = [sigma(2 * n - i + j) for i in range(2 * n - 2) for j in range(2 * m - 2)]
    return Word(tuple(letters), strands=2 * (n + m - 1))


def plat_sum(alpha: Word, beta: Word) -> Word:
    """``alpha # beta``: alpha, the bridge word, then beta verbatim."""
    if alpha.genus != beta.genus:
        raise WordError(f"genus mismatch: {alpha.genus} vs {beta.genus}")
    n, m = alpha.strands // 2, beta.strands // 2
    w = bridge_word(n, m)
    return Word(alpha.letters + w.letters + beta.letters, alpha.genus, 2 * (n + m - 1))


def twist_substitution(k: int, w: Word) -> Word:
    """Apply the strand-doubling homomorphism of move M6 letter by letter."""
    if k < 1:
        raise WordError("k must be positive")
    block = [sigma(2 * k), sigma(2 * k + 1), sigma(2 * k + 2), sigma(2 * k + 1, -1), sigma(2 * k, -1)]
    out: List[Letter] = []
    for x in w.letters:
        if x.kind != "s":
            out.append(x)
            continue
        i = x.index
        if i < 2 * k:
            out.append(x)
        elif i > 2 * k:
            out.append(sigma(i + 2, x.exp))
        elif x.exp == 1:
            out.extend(block)
        else:
            out.extend(y.inverse() for y in reversed(block))
    return Word(tuple(out), w.genus, w.strands + 2)


def untwist_substitution(k: int, w: Word) -> Word:
    """Inverse of :func:`twist_substitution` on its image."""
    block = (sigma(2 * k), sigma(2 * k + 1), sigma(2 * k + 2), sigma(2 * k + 1, -1), sigma(2 * k, -1))
    inv_block = tuple(y.inverse() for y in reversed(block))
    out: List[Letter] = []
    xs = w.letters
    pos = 0
    while pos < len(xs):
        x = xs[pos]
        if x.kind == "s" and x.index in (2 * k, 2 * k + 1, 2 * k + 2):
            chunk = xs[pos:pos + 5]
            if chunk == block:
                out.append(sigma(2 * k))
            elif chunk == inv_block:
                out.append(sigma(2 * k, -1))
            else:
                raise WordError(f"not in the image of the substitution at letter {pos}")
            pos += 5
            continue
        if x.kind == "s" and x.index > 2 * k + 2:
            out.append(sigma(x.index - 2, x.exp))
        else:
            out.append(x)
        pos += 1
    return Word(tuple(out), w.genus, max(2, w.strands - 2))


def _move_word(tag: str, index: int, genus: int) -> List[Letter]:
    if tag == "M1":
        return [sigma(1)]
    if tag == "M2":
        if index < 1:
            raise WordError("M2 needs i >= 1")
        i = index
        return [sigma(2 * i), sigma(2 * i + 1), sigma(2 * i - 1), sigma(2 * i)]
    if tag == "M3":
        return [sigma(2), sigma(1), sigma(1), sigma(2)]
    if tag in ("M4", "M5"):
        if not 1 <= index <= genus:
            raise WordError(f"{tag} index {index} outside 1..{genus}")
        g = Letter(("a" if tag == "M4" else "b") + str(index))
        return [g, sigma(1, -1), g, sigma(1, -1)]
    raise WordError(f"unknown move {tag!r}")


def apply_move(tag: str, beta: Word, side: str = "left", index: int = 1) -> Word:
    """Apply one of the plat moves M1 to M6 in the growing direction.

    M1 to M5 put their fixed word on ``side`` of ``beta``.  M6 ignores
    ``side``: it substitutes with ``k = index`` and appends ``sigma_{2k}``.
    """
    if tag == "M6":
        k = index
        if k < 1 or 2 * k > beta.strands:
            raise WordError(f"M6 needs 1 <= k and 2k <= {beta.strands}")
        t = twist_substitution(k, beta)
        return Word(t.letters + (sigma(2 * k),), beta.genus, t.strands)
    extra = _move_word(tag, index, beta.genus)
    if tag == "M2" and 2 * index + 1 > beta.strands - 1:
        raise WordError(f"M2 index {index} too large for {beta.strands} strands")
    if side == "left":
        letters = tuple(extra) + beta.letters
    elif side == "right":
        letters = beta.letters + tuple(extra)
    else:
        raise WordError(f"side must be left or right, got {side!r}")
    return Word(letters, beta.genus, beta.strands)


def psl_star(i: int, beta: Word) -> Word:
    """Dual slide: append ``b_i``."""
    if not 1 <= i <= beta.genus:
        raise WordError(f"index {i} outside 1..{beta.genus}")
    return Word(beta.letters + (Letter(f"b{i}"),), beta.genus, beta.strands)


def alpha_pq(p: int, q: int) -> Word:
    """Genus-1 slide word with ``r = p mod q`` rounded-up blocks first."""
    if q <= 0:
        raise WordError("q must be positive")
    low, r = divmod(p, q)
    high = low + (1 if r else 0)

    def block(e: int) -> List[Letter]:
        return [Letter("b1", -1)] + [Letter("a1", 1 if e > 0 else -1)] * abs(e)

    letters: List[Letter] = []
    for _ in range(r):
        letters += block(high)
    for _ in range(q - r):
        letters += block(low)
    return Word(tuple(letters), genus=1, strands=2)


# --- meridian words --------------------------------------------------------

#: Pair shapes, keyed by where the red arc lands and which bundle it uses.
SHAPES = {
    "up-left": "al",  # lands on Tl
    "down-right": "ar",  # lands on Br
    "up-right": "ar^-1",  # lands on Tr
    "down-left": "al^-1",  # lands on Bl
    "back-up": "br^-1 ar^-1",  # back b-bundle, Bl to Tr
    "back-down": "br al^-1",  # back b-bundle, Tr to Bl
    "cross-down": "br al^-1",  # case-3 d-bundle, Tl to Bl
    "cross-up": "br^-1 al",  # case-3 d-bundle, Bl to Tl
}
_BY_LANDING = {"Tl": "up-left", "Br": "down-right", "Tr": "up-right", "Bl": "down-left"}


class PairContext(NamedTuple):
    """A red arc followed by the blue arc at its landing vertex.

    ``winding`` is the signed turn of that blue arc in the traversal
    direction; ``side`` names the handle it runs along.
    """

    shape: str
    side: str
    winding: int = 0


def pair_context(diagram: RichDiagram, start: Endpoint, end: Endpoint, winding: int) -> PairContext:
    """Classify the step running the red arc ``start -> end`` and then the
    blue arc at ``end`` (``winding`` measured top to bottom)."""
    arc = diagram.arc_at()[start]
    shape = _BY_LANDING[end.position]
    if arc.bundle == "b-back":
        shape = "back-up" if start.position == "Bl" else "back-down"
    elif arc.bundle == "d" and diagram.kind is CaseKind.CASE3:
        shape = "cross-up" if start.position == "Bl" else "cross-down"
    top = end.position[0] == "T"
    return PairContext(shape, end.position[1], winding if top else -winding)


def elementary_word(ctx: PairContext) -> Word:
    """Word of one step: the shape's letters, then ``b_side^{+-1}`` if the
    blue arc winds."""
    if ctx.shape not in SHAPES:
        raise WordError(f"unknown shape {ctx.shape!r}")
    if ctx.winding not in (-1, 0, 1):
        raise WordError(f"winding {ctx.winding} out of range")
    letters = [Letter.parse(t) for t in SHAPES[ctx.shape].split()]
    if ctx.winding:
        letters.append(Letter("b" + ctx.side, ctx.winding))
    return Word(tuple(letters))


def curve_word(curve: Curve, diagram: RichDiagram) -> Word:
    """Chain the elementary words of an oriented curve."""
    letters: List[Letter] = []
    for (start, end), blue in zip(curve.reds, curve.blues):
        letters.extend(elementary_word(pair_context(diagram, start, end, blue.winding)).letters)
    return Word(tuple(letters))


class Computation(NamedTuple):
    diagram: RichDiagram
    blues: List[BlueArc]
    curves: List[Curve]
    words: List[Word]


def compute(f: SixTuple) -> Computation:
    """Run the whole construction for ``f`` and keep every stage."""
    f = f.normalized()
    bad = validate_conditions(f)
    if bad:
        raise ConditionError(f, bad)
    g = build_graph(f)
    if count_residues(g, (2, 3)) != 3:
        raise InadmissibleError(f"{f} is not admissible: rho_23 != 3")
    diagram = build_red_arcs(f, g)
    blues = connect_blue(diagram, compute_landmarks(diagram))
    curves = [orient_curve(c, diagram) for c in trace_curves(diagram, blues)]
    return Computation(diagram, blues, curves, [curve_word(c, diagram) for c in curves])


def chi_words(f: SixTuple) -> List[Word]:
    """The three meridian words of ``f``, unreduced.

    >>> sorted(str(w) for w in chi_words(SixTuple(3, 3, 3, 2, 2, 2)))[0]
    'al bl ar br^-1 al bl br^-1 ar^-1 br'
    """
    return compute(f).words


def psl(f: SixTuple, i: int, beta: Optional[Word] = None) -> Word:
    """Slide move along meridian ``i``: its word followed by ``beta``."""
    if i not in (0, 1, 2):
        raise WordError("curve index must be 0, 1 or 2")
    chi = chi_words(f)[i]
    if beta is None:
        return chi
    if beta.genus != 2:
        raise WordError("beta must live in genus 2")
    return Word(chi.letters + beta.letters, 2, beta.strands)
